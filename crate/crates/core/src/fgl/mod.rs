//! Formal group law arithmetic: truncated formal sums, n-series,
//! multi-sums, inverse series and the support decomposition feeding the
//! divisor-class formula.

mod decompose;
mod law;
mod series;

pub use decompose::{support_decompose, SupportDecomposition};
pub use law::{AssocReport, FormalGroupLaw};
pub use series::TruncSeries;
