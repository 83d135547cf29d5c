//! Structured check reports shared by the engines and the CLI.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Error,
}

/// One named check with an optional failure witness.
#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    pub detail: String,
}

impl Check {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: CheckStatus::Pass,
            witness: None,
            detail: detail.into(),
        }
    }

    pub fn fail(
        name: impl Into<String>,
        witness: impl Into<String>,
        detail: impl Into<String>,
    ) -> Self {
        Check {
            name: name.into(),
            status: CheckStatus::Fail,
            witness: Some(witness.into()),
            detail: detail.into(),
        }
    }
}

/// Outcome of one command or engine run. `status` is `pass` iff every check
/// passed; `error` marks pre-run failures (parse or validation problems).
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub status: CheckStatus,
    pub checks: Vec<Check>,
    pub timing_ms: u64,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            status: CheckStatus::Pass,
            checks: Vec::new(),
            timing_ms: 0,
        }
    }

    pub fn push(&mut self, check: Check) {
        if check.status == CheckStatus::Fail && self.status == CheckStatus::Pass {
            self.status = CheckStatus::Fail;
        }
        self.checks.push(check);
    }

    pub fn error(command: impl Into<String>, detail: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            status: CheckStatus::Error,
            checks: vec![Check {
                name: "input".into(),
                status: CheckStatus::Error,
                witness: None,
                detail: detail.into(),
            }],
            timing_ms: 0,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    /// Process exit code: 0 pass, 1 fail, 2 error.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            CheckStatus::Pass => 0,
            CheckStatus::Fail => 1,
            CheckStatus::Error => 2,
        }
    }
}
