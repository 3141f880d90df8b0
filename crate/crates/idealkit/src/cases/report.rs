use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CaseStatus {
    /// Every checked identity holds exactly.
    Confirmed,
    /// Holds after normalizing both sides by a reported nonzero factor.
    ConfirmedUpToScalar,
    /// Term-level differences were found and itemized.
    DiffsFound,
    /// A strict expectation failed outright.
    Refuted,
    /// Prerequisites missing or resource limit hit; reason recorded.
    Skipped,
}

impl CaseStatus {
    pub fn name(&self) -> &'static str {
        match self {
            CaseStatus::Confirmed => "Confirmed",
            CaseStatus::ConfirmedUpToScalar => "ConfirmedUpToScalar",
            CaseStatus::DiffsFound => "DiffsFound",
            CaseStatus::Refuted => "Refuted",
            CaseStatus::Skipped => "Skipped",
        }
    }

    pub fn passes_strict(&self) -> bool {
        matches!(self, CaseStatus::Confirmed | CaseStatus::ConfirmedUpToScalar)
    }
}

/// One itemized coefficient difference.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TermDiff {
    pub monomial: String,
    pub expected: String,
    pub computed: String,
}

/// Outcome of one scripted verification case. Reports are reproducible
/// bit-for-bit across runs (timing excluded from comparisons).
#[derive(Debug, Clone, Serialize)]
pub struct CaseReport {
    pub case_id: String,
    pub status: CaseStatus,
    pub citation: String,
    pub certificates: Vec<String>,
    pub diffs: Vec<TermDiff>,
    pub elapsed_ms: u128,
}

impl CaseReport {
    pub fn render_text(&self) -> String {
        const DIFF_RENDER_CAP: usize = 12;
        let mut s = format!(
            "{:<18} {:<20} [{}] {} ms\n",
            self.case_id,
            self.status.name(),
            self.citation,
            self.elapsed_ms
        );
        for c in &self.certificates {
            s.push_str(&format!("    cert: {c}\n"));
        }
        for d in self.diffs.iter().take(DIFF_RENDER_CAP) {
            s.push_str(&format!(
                "    diff: {} expected {} computed {}\n",
                d.monomial, d.expected, d.computed
            ));
        }
        if self.diffs.len() > DIFF_RENDER_CAP {
            s.push_str(&format!(
                "    diff: (+{} more; full list in the JSON output)\n",
                self.diffs.len() - DIFF_RENDER_CAP
            ));
        }
        s
    }
}
