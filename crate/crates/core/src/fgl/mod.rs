//! Formal group laws: the catalog, axiom checks, logarithms, `[n]`-series and
//! strict isomorphisms.

mod catalog;
mod iso;
mod law;

pub use catalog::{
    broken_demo, catalog, chi_rescaled_closed_form, chi_rescaled_display, gamma_exponent,
    gamma_exponential, gamma_exponential_normalized, hyperbolic_exponential, jacobi_closed_form,
    kontsevich_closed_form, kontsevich_from_germ, law_from_germ, lookup, universal_exponential,
    BROKEN_DEMO, CATALOG,
};
pub use iso::{
    adjudicate_kontsevich_iso, conjugate_kontsevich, mobius_coordinate_change, Adjudication,
    AdjudicationRow, AdjudicationStatus, MobiusConvention, CONVENTIONS, TARGETS,
};
pub use law::{
    canonical_strict_iso, gaussian_bracket, verify_iso, AxiomReport, Construction, FormalGroupLaw,
};
