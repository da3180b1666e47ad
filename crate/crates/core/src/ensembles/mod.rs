//! Haar ensembles, their analytic densities and Monte Carlo estimators.

mod density;
mod estimators;
mod gof;
mod quadrature;
mod rng;
mod sampler;

pub use density::{coe4_repulsion, integrate_phase_cube, pdf_alpha, pdf_alpha_chamber, pdf_coe4_marginal, pdf_eta};
pub use estimators::{
    alpha_bin_masses, alpha_gof, coe_bin_masses, coe_gof, entropy_offset, mc_mean_entropies, mc_mean_entropy,
    mc_pe_fraction, mc_purity, pairwise_sum, parallel_map, purity_curve, purity_from_eta, random_vector_mean_entropy,
    sample_record, sample_records, singular_value_histogram, write_curve_csv, write_samples_csv, EstimateWithCI,
    Histogram, PeFraction, PurityEstimate, SampleRecord, SAMPLE_HEADER,
};
pub use gof::{chi_square_gof, chi_square_two_sample, ChiSquareTest};
pub use quadrature::{integrate_chamber, integrate_pe, integrate_volumes, GaussLegendre, Volumes};
pub use rng::SampleRng;
pub use sampler::{coe_eigenphase_triple, haar_unitary, sample_unitary, EnsembleKind, EnsembleSpec};
