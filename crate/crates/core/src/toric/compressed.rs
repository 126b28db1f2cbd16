//! Sampling reverse lexicographic orders for non-squarefree initial ideals.

use super::certify::{hilbert_check, initial_ideal};
use super::buchberger::truncated_groebner_basis;
use super::{markov_generators_up_to, validate_kernel, Binomial, Monomial, MonomialOrder};
use crate::cut::cut_matrix;
use crate::error::{Error, Result};
use crate::graph::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// Outcome of [`compressed_probe`]. A witness is conclusive; its absence
/// only means none of the sampled orders produced one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum CompressedVerdict {
    ConsistentWithCompressed { trials: usize },
    WitnessOrderFound {
        trial: usize,
        /// Cut indices from smallest to largest variable.
        ranking: Vec<usize>,
        /// A minimal generator of the initial ideal with an exponent above 1.
        monomial: String,
    },
}

impl CompressedVerdict {
    pub fn witness_found(&self) -> bool {
        matches!(self, CompressedVerdict::WitnessOrderFound { .. })
    }
}

/// Draws `trials` random variable rankings from a ChaCha8 stream seeded by
/// `seed`, computes the reduced Gröbner basis up to degree `degree` of the
/// ideal generated in degree ≤ `degree` under each, and reports the first
/// order whose initial ideal has a non-squarefree minimal generator.
///
/// A candidate witness of degree `d` is accepted only if the Hilbert check
/// confirms the computed leading terms agree with the true initial ideal up
/// to degree `d`, so truncation can never produce a false witness.
pub fn compressed_probe(g: &Graph, trials: usize, seed: u64, degree: usize) -> Result<CompressedVerdict> {
    if trials == 0 {
        return Err(Error::Precondition("at least one trial is needed".into()));
    }
    let matrix = cut_matrix(g)?;
    let gens = markov_generators_up_to(&matrix, degree.max(2))?;
    if gens.is_empty() {
        return Ok(CompressedVerdict::ConsistentWithCompressed { trials });
    }
    validate_kernel(&gens, &matrix)?;
    let cap = degree.max(2) as u32;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..trials {
        let ord = MonomialOrder::random(matrix.num_columns(), &mut rng, format!("sample {trial}"));
        let gb = truncated_groebner_basis(&gens, &ord, cap);
        if let Some(m) = non_squarefree_generator(&gb, &ord) {
            if hilbert_check(&gb, &matrix, m.degree() as usize)? {
                return Ok(CompressedVerdict::WitnessOrderFound {
                    trial,
                    ranking: ord.ranking().to_vec(),
                    monomial: m.to_string(),
                });
            }
        }
    }
    Ok(CompressedVerdict::ConsistentWithCompressed { trials })
}

fn non_squarefree_generator(gb: &[Binomial], ord: &MonomialOrder) -> Option<Monomial> {
    let mut gens = initial_ideal(gb, ord);
    gens.sort_by_key(Monomial::degree);
    gens.into_iter().find(|m| !m.is_squarefree())
}
