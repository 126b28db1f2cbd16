//! Polynomial side of cut ideals: monomials, term orders, binomials, fibers,
//! minimal generators and Gröbner bases.

mod binomial;
pub mod buchberger;
mod certify;
mod compressed;
mod families;
mod fiber;
mod markov;
mod monomial;
mod order;

pub use binomial::{format_binomials, validate_kernel, Binomial};
pub use buchberger::{buchberger, is_reduced, normal_form, truncated_groebner_basis};
pub use certify::{
    hilbert_check, initial_ideal, is_groebner_basis, is_squarefree, s_pairs_reduce,
    standard_monomial_counts,
};
pub use compressed::{compressed_probe, CompressedVerdict};
pub use families::{lemma_families_k1m, theorem_families_k2m, FamilyBasis, FamilyLabel};
pub use fiber::{degree_fibers, fiber, semigroup_degree, semigroup_levels};
pub use markov::markov_generators_up_to;
pub use monomial::{for_each_multiset, Monomial};
pub use order::{describe_ranking, paper_order, paper_order_with, MonomialOrder, TieBreak};
