//! Exhaustive checking of the algebraic laws up to a degree cap.

mod checks;
mod diagram;
mod report;
mod suite;

pub use checks::{
    check_antipode, check_bialgebra, check_coalgebra, check_cofreeness, check_connection, check_dims,
    check_hopf_module, check_one_sided_unit, check_operad, check_operad_product, check_primitive_span,
    primitive_series,
};
pub use diagram::check_diagram;
pub use report::{CheckReport, Counterexample, Status};
pub use suite::{default_suite, run_suite, SuiteEntry};
