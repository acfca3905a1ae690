use std::fmt;

use serde::{Deserialize, Serialize};

/// Which step of the case analysis produced a trace entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseLabel {
    /// A member has a vertex above the high-degree bound.
    HighDegreeVertex,
    /// A graph member has an oversized color class.
    ColorClass,
    /// Fix an edge of the first member and delete around it.
    ArbitraryEdge,
    /// Recurse without one member, then look for an extending edge.
    ExtendScan,
    /// Descend to the links of `s` selected vertices.
    LinkDescent,
    Lemma2Call,
    Lemma1Call,
    /// `s = 1`: take the first edge.
    Base,
}

impl CaseLabel {
    pub fn as_str(self) -> &'static str {
        match self {
            CaseLabel::HighDegreeVertex => "high-degree-vertex",
            CaseLabel::ColorClass => "color-class",
            CaseLabel::ArbitraryEdge => "arbitrary-edge",
            CaseLabel::ExtendScan => "extend-scan",
            CaseLabel::LinkDescent => "link-descent",
            CaseLabel::Lemma2Call => "lemma2-call",
            CaseLabel::Lemma1Call => "lemma1-call",
            CaseLabel::Base => "base",
        }
    }

    /// Steps after which the next entry belongs to a call with `s - 1`.
    pub fn reduces_s(self) -> bool {
        matches!(
            self,
            CaseLabel::HighDegreeVertex | CaseLabel::ColorClass | CaseLabel::ArbitraryEdge
        )
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub depth: usize,
    pub case: CaseLabel,
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub detail: String,
}

impl fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {} {} {}", self.depth, self.case, self.n, self.k, self.s)?;
        if !self.detail.is_empty() {
            write!(f, " {}", self.detail)?;
        }
        Ok(())
    }
}

/// Ordered log of the steps taken while building a witness.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofTrace {
    pub entries: Vec<TraceEntry>,
}

impl ProofTrace {
    pub fn count(&self, case: CaseLabel) -> usize {
        self.entries.iter().filter(|e| e.case == case).count()
    }

    pub fn max_depth(&self) -> usize {
        self.entries.iter().map(|e| e.depth).max().unwrap_or(0)
    }

    /// One line per entry: `depth case n k s detail…`.
    pub fn to_log(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&e.to_string());
            out.push('\n');
        }
        out
    }
}
