use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
        })
    }
}

/// Outcome of a brute-force check, with the subset that decided it.
///
/// For property checks (`cupcap-free`, `stepup`, ...) a failing certificate
/// carries the violating subset. For witness searches (`mono-convex`) a
/// passing certificate carries the witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub verdict: Verdict,
    pub property: String,
    pub examined: u64,
    pub witness: Option<Vec<usize>>,
    /// Extra `key=value` facts appended to the text form.
    pub notes: Vec<(String, String)>,
}

impl Certificate {
    pub fn pass(property: impl Into<String>, examined: u64) -> Self {
        Certificate {
            verdict: Verdict::Pass,
            property: property.into(),
            examined,
            witness: None,
            notes: Vec::new(),
        }
    }

    pub fn fail(property: impl Into<String>, examined: u64, witness: Vec<usize>) -> Self {
        Certificate {
            verdict: Verdict::Fail,
            property: property.into(),
            examined,
            witness: Some(witness),
            notes: Vec::new(),
        }
    }

    /// Failing search with nothing to show: no subset has the property.
    pub fn not_found(property: impl Into<String>, examined: u64) -> Self {
        Certificate {
            verdict: Verdict::Fail,
            property: property.into(),
            examined,
            witness: None,
            notes: Vec::new(),
        }
    }

    pub fn with_witness(mut self, witness: Vec<usize>) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn with_note(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.notes.push((key.into(), value.to_string()));
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn note(&self, key: &str) -> Option<&str> {
        self.notes.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "verdict={} property={} examined={} witness=",
            self.verdict, self.property, self.examined
        )?;
        if let Some(w) = &self.witness {
            let parts: Vec<String> = w.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))?;
        }
        for (k, v) in &self.notes {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}
