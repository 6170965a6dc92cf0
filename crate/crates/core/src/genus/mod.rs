//! Hirzebruch genera: characteristic series, evaluation on projective spaces
//! and Chern-number tables, and the Γ-genus and Witten checks.

mod evaluate;
mod gamma;
mod series;
mod witten;

pub use evaluate::{
    chern_partitions, chi_t_sign_report, genus_cpn, genus_of, genus_table, mishchenko_check,
    parse_chern_table, ChiTSign, ManifoldDescriptor,
};
pub use gamma::{
    ahat_exponent_coefficient, ahat_pontryagin_identity, chi_rescaled_check,
    conjugation_equivariance_check, gamma_split_report, msp_agreement_check,
    numeric_gamma_validation, power_sum_map_report, reflect, universal_gamma, AhatReport,
    EvenMapRow, GammaSplitReport, MspReport, NumericReport, OddSign, PowerSumMapReport,
    UniversalReport,
};
pub use series::{ahat_h, gamma_series, genus_series, GenusSeries, SERIES_CATALOG};
pub use witten::{divisor_sigma, witten_checks, witten_series, WittenReport, WittenSeries};
