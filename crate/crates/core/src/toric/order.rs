use super::Monomial;
use crate::cut::Cut;
use crate::error::{Error, Result};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;
use std::fmt;

/// Graded reverse lexicographic order with respect to a ranking of the
/// variables (`rank[v] == 0` is the smallest variable).
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    rank: Vec<usize>,
    /// `by_rank[r]` is the variable of rank `r`.
    by_rank: Vec<usize>,
    name: String,
}

impl fmt::Debug for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialOrder({}: {:?})", self.name, self.by_rank)
    }
}

/// How cuts with equal `min(|A|,|B|)` are ordered in [`paper_order_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TieBreak {
    /// Ascending cut index, except that `{1}|{2..n}` comes first among the
    /// cuts with a singleton part (making it the second smallest variable).
    Default,
    /// Ascending cut index.
    Ascending,
    /// Descending cut index.
    Descending,
    /// Seeded shuffle inside each block.
    Shuffled(u64),
}

impl fmt::Display for TieBreak {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TieBreak::Default => f.write_str("default"),
            TieBreak::Ascending => f.write_str("ascending"),
            TieBreak::Descending => f.write_str("descending"),
            TieBreak::Shuffled(seed) => write!(f, "shuffled:{seed}"),
        }
    }
}

impl TieBreak {
    /// The three alternatives used to check that results do not depend on
    /// how ties are broken.
    pub const ALTERNATES: [TieBreak; 3] =
        [TieBreak::Ascending, TieBreak::Descending, TieBreak::Shuffled(1)];
}

impl MonomialOrder {
    /// Order from a list of variables, smallest first.
    pub fn from_ranking(by_rank: Vec<usize>, name: impl Into<String>) -> Result<Self> {
        let n = by_rank.len();
        let mut rank = vec![usize::MAX; n];
        for (r, &v) in by_rank.iter().enumerate() {
            if v >= n || rank[v] != usize::MAX {
                return Err(Error::Precondition(format!("{by_rank:?} is not a permutation")));
            }
            rank[v] = r;
        }
        Ok(Self { rank, by_rank, name: name.into() })
    }

    /// Variables ranked by index (`q[0]` smallest).
    pub fn natural(nvars: usize) -> Self {
        Self::from_ranking((0..nvars).collect(), "natural").expect("identity")
    }

    /// A uniformly random ranking drawn from `rng`.
    pub fn random(nvars: usize, rng: &mut ChaCha8Rng, name: impl Into<String>) -> Self {
        let mut vars: Vec<usize> = (0..nvars).collect();
        vars.shuffle(rng);
        Self::from_ranking(vars, name).expect("shuffle is a permutation")
    }

    pub fn num_vars(&self) -> usize {
        self.rank.len()
    }

    pub fn rank(&self, var: usize) -> usize {
        self.rank[var]
    }

    /// Variables from smallest to largest.
    pub fn ranking(&self) -> &[usize] {
        &self.by_rank
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Higher degree wins; in equal degree, the monomial with the larger
    /// exponent on the smallest variable where they differ is smaller.
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match a.degree().cmp(&b.degree()) {
            Ordering::Equal => {}
            other => return other,
        }
        if a == b {
            return Ordering::Equal;
        }
        // smallest-ranked variable where the exponents differ
        let mut best: Option<(usize, Ordering)> = None;
        let mut consider = |v: usize, ea: u32, eb: u32| {
            if ea != eb {
                let r = self.rank[v];
                if best.is_none_or(|(br, _)| r < br) {
                    best = Some((r, eb.cmp(&ea)));
                }
            }
        };
        for (v, ea) in a.iter() {
            consider(v, ea, b.exponent(v));
        }
        for (v, eb) in b.iter() {
            consider(v, a.exponent(v), eb);
        }
        best.map(|(_, o)| o).unwrap_or(Ordering::Equal)
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

/// Reverse lexicographic order in which `q_{A|B} < q_{C|D}` whenever
/// `min(|A|,|B|) < min(|C|,|D|)`, with the default tie-break.
pub fn paper_order(n: usize) -> Result<MonomialOrder> {
    paper_order_with(n, TieBreak::Default)
}

/// As [`paper_order`], with an explicit rule for ordering cuts whose smaller
/// part has the same size.
pub fn paper_order_with(n: usize, tie: TieBreak) -> Result<MonomialOrder> {
    if n < 2 {
        return Err(Error::Precondition(format!("need n >= 2, got {n}")));
    }
    let cuts = crate::cut::enumerate_cuts(n)?;
    let singleton_one = (1usize << (n - 1)) - 1; // {2..n} | {1}
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); n / 2 + 1];
    for c in &cuts {
        blocks[c.min_part()].push(c.index());
    }
    let mut rng = match tie {
        TieBreak::Shuffled(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        _ => None,
    };
    let mut ranking = Vec::with_capacity(cuts.len());
    for (size, mut block) in blocks.into_iter().enumerate() {
        match tie {
            TieBreak::Default => {
                block.sort_unstable();
                if size == 1 {
                    if let Some(p) = block.iter().position(|&k| k == singleton_one) {
                        let k = block.remove(p);
                        block.insert(0, k);
                    }
                }
            }
            TieBreak::Ascending => block.sort_unstable(),
            TieBreak::Descending => block.sort_unstable_by(|a, b| b.cmp(a)),
            TieBreak::Shuffled(_) => {
                block.sort_unstable();
                block.shuffle(rng.as_mut().expect("seeded"));
            }
        }
        ranking.extend(block);
    }
    MonomialOrder::from_ranking(ranking, format!("min-part revlex (n={n}, ties {tie})"))
}

/// The cut behind each variable of an `n`-vertex order, for display.
pub fn describe_ranking(order: &MonomialOrder, n: usize) -> Vec<String> {
    order
        .ranking()
        .iter()
        .map(|&k| Cut::from_index(n, k).map(|c| c.to_string()).unwrap_or_default())
        .collect()
}
