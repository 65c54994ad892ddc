use crate::par::Execution;

/// Resource limits and execution mode shared by every Groebner-driven operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Settings {
    /// Maximum number of polynomial reduction steps per Groebner computation.
    pub step_budget: u64,
    pub execution: Execution,
}

pub const DEFAULT_STEP_BUDGET: u64 = 20_000_000;

impl Default for Settings {
    fn default() -> Self {
        Settings { step_budget: DEFAULT_STEP_BUDGET, execution: Execution::default() }
    }
}

impl Settings {
    pub fn with_budget(step_budget: u64) -> Self {
        Settings { step_budget, ..Settings::default() }
    }

    pub fn sequential(self) -> Self {
        Settings { execution: Execution::Sequential, ..self }
    }
}
