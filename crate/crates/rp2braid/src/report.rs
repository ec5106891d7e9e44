//! Run reports: a serializable summary of a claim run, a plain-text
//! renderer, and the exit-code policy.

use serde::Serialize;

use crate::claims::{ClaimClass, ClaimResult, ClaimStatus};
use crate::registry::RunConfig;

/// Echo of the knobs a run was executed with, for reproducibility.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigEcho {
    pub max_cosets: usize,
    pub kb_max_rules: usize,
    pub cache_dir: Option<String>,
}

impl From<&RunConfig> for ConfigEcho {
    fn from(c: &RunConfig) -> Self {
        ConfigEcho {
            max_cosets: c.max_cosets,
            kb_max_rules: c.kb_max_rules,
            cache_dir: c.cache_dir.as_ref().map(|p| p.display().to_string()),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub consistent: usize,
    pub undecided: usize,
    pub skipped: usize,
}

/// A full run report. Claims are kept sorted by identifier so that the
/// serialized form is deterministic.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub version: &'static str,
    pub config: ConfigEcho,
    pub claims: Vec<ClaimResult>,
    pub summary: Summary,
}

impl Report {
    pub fn new(config: &RunConfig, claims: Vec<ClaimResult>) -> Report {
        let mut summary = Summary {
            pass: 0,
            fail: 0,
            consistent: 0,
            undecided: 0,
            skipped: 0,
        };
        for c in &claims {
            match c.status {
                ClaimStatus::Pass => summary.pass += 1,
                ClaimStatus::Fail => summary.fail += 1,
                ClaimStatus::Consistent => summary.consistent += 1,
                ClaimStatus::Undecided => summary.undecided += 1,
                ClaimStatus::Skipped => summary.skipped += 1,
            }
        }
        Report {
            version: env!("CARGO_PKG_VERSION"),
            config: ConfigEcho::from(config),
            claims,
            summary,
        }
    }

    /// Exit policy: failures always fail the run; an exact claim left
    /// undecided also fails it, while an undecided consistency claim does
    /// not, because those record open-ended searches.
    pub fn exit_code(&self) -> i32 {
        let blocking = self.claims.iter().any(|c| {
            c.status == ClaimStatus::Fail
                || (c.status == ClaimStatus::Undecided && c.class == ClaimClass::Exact)
        });
        i32::from(blocking)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.claims {
            let tag = match c.status {
                ClaimStatus::Pass => "PASS      ",
                ClaimStatus::Fail => "FAIL      ",
                ClaimStatus::Consistent => "CONSISTENT",
                ClaimStatus::Undecided => "UNDECIDED ",
                ClaimStatus::Skipped => "SKIPPED   ",
            };
            out.push_str(&format!("{tag} {:<18} {}\n", c.id, c.details));
        }
        let s = &self.summary;
        out.push_str(&format!(
            "\n{} claims: {} pass, {} fail, {} consistent, {} undecided, {} skipped\n",
            self.claims.len(),
            s.pass,
            s.fail,
            s.consistent,
            s.undecided,
            s.skipped
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn result(id: &str, class: ClaimClass, status: ClaimStatus) -> ClaimResult {
        ClaimResult {
            id: id.to_string(),
            class,
            status,
            statement: String::new(),
            details: "d".to_string(),
            elapsed_ms: 0,
        }
    }

    #[test]
    fn exit_code_policy() {
        let cfg = RunConfig::default();
        let ok = Report::new(
            &cfg,
            vec![
                result("a", ClaimClass::Exact, ClaimStatus::Pass),
                result("b", ClaimClass::Consistency, ClaimStatus::Undecided),
                result("c", ClaimClass::Consistency, ClaimStatus::Consistent),
            ],
        );
        assert_eq!(ok.exit_code(), 0);
        assert_eq!(ok.summary.pass, 1);
        assert_eq!(ok.summary.undecided, 1);

        let failed = Report::new(&cfg, vec![result("a", ClaimClass::Exact, ClaimStatus::Fail)]);
        assert_eq!(failed.exit_code(), 1);

        let stuck = Report::new(
            &cfg,
            vec![result("a", ClaimClass::Exact, ClaimStatus::Undecided)],
        );
        assert_eq!(stuck.exit_code(), 1);
    }

    #[test]
    fn json_shape_is_stable() {
        let cfg = RunConfig::default();
        let report = Report::new(
            &cfg,
            vec![result("a:b", ClaimClass::Exact, ClaimStatus::Pass)],
        );
        let json = report.to_json();
        assert!(json.contains("\"class\": \"exact\""));
        assert!(json.contains("\"status\": \"PASS\""));
        assert!(json.contains("\"summary\""));
        assert!(json.contains("\"max_cosets\": 2000000"));
    }

    #[test]
    fn text_render_has_one_line_per_claim() {
        let cfg = RunConfig::default();
        let report = Report::new(
            &cfg,
            vec![
                result("a", ClaimClass::Exact, ClaimStatus::Pass),
                result("b", ClaimClass::Consistency, ClaimStatus::Consistent),
            ],
        );
        let text = report.render_text();
        assert_eq!(text.lines().filter(|l| !l.is_empty()).count(), 3);
    }
}
