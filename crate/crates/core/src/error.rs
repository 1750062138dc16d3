use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} requires a nonempty word")]
    EmptyWord(&'static str),
    #[error("grade must be at least 1")]
    ZeroGrade,
    #[error("grade {grade} exceeds the context truncation {context}")]
    GradeAboveContext { grade: u32, context: u32 },
    #[error("series is only known up to degree {have}, but degree {need} is required")]
    TruncationTooLow { have: u32, need: u32 },
    #[error("step size must be positive, got {0}")]
    NonPositiveStep(f64),
    #[error("end time must be nonnegative, got {0}")]
    NegativeEndTime(f64),
    #[error("solution blew up: |z| = {z:e} at t = {t}")]
    BlowUp { t: f64, z: f64 },
}
