//! Symmetry verification for finite games: ordinary, weighted, renaming,
//! strategy and name-irrelevant symmetry, each realized as invariance of the
//! structure vector V_G under a linear representation of S_n (or of the
//! block-permutation group), plus computation of symmetric-subspace bases.
//!
//! All checks run over the transposition generators (1,r) only; invariance
//! under a generating set is equivalent to invariance under the whole group.

use crate::game::{t_sigma, t_theta, Game};
use crate::group::{
    enumerate_theta_bounded, transposition_generators, BlockPermutation, Permutation,
    DEFAULT_THETA_BOUND,
};
use crate::linalg::nullspace;
use crate::rational::{all_positive, Rational};
use crate::stp::{row_times_logical, LogicalMatrix, RationalMatrix};
use crate::BoundExceeded;
use num_traits::{One, Signed, Zero};
use std::collections::HashSet;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SymmetryError {
    NonPositiveWeight,
    WeightCount { expected: usize, got: usize },
    RenamingCount { expected: usize, got: usize },
    RenamingDegree { player: usize, expected: usize, got: usize },
}

impl fmt::Display for SymmetryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetryError::NonPositiveWeight => write!(f, "weights must be strictly positive"),
            SymmetryError::WeightCount { expected, got } => {
                write!(f, "expected {expected} weights, got {got}")
            }
            SymmetryError::RenamingCount { expected, got } => {
                write!(f, "expected {expected} renaming permutations, got {got}")
            }
            SymmetryError::RenamingDegree {
                player,
                expected,
                got,
            } => write!(
                f,
                "renaming for player {player} acts on {got} strategies, expected {expected}"
            ),
        }
    }
}

impl std::error::Error for SymmetryError {}

/// Positive weights μ_1,…,μ_n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weights(Vec<Rational>);

impl Weights {
    pub fn new(mu: Vec<Rational>) -> Result<Self, SymmetryError> {
        if !all_positive(&mu) {
            return Err(SymmetryError::NonPositiveWeight);
        }
        Ok(Weights(mu))
    }

    pub fn unit(n: usize) -> Self {
        Weights(vec![Rational::one(); n])
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Integer-cleared form: scaled so entries are coprime positive integers.
    pub fn cleared(&self) -> Vec<Rational> {
        use num_bigint::BigInt;
        use num_integer::Integer;
        let lcm_den = self
            .0
            .iter()
            .fold(BigInt::from(1), |acc, v| acc.lcm(v.denom()));
        let scaled: Vec<BigInt> = self
            .0
            .iter()
            .map(|v| v.numer() * &lcm_den / v.denom())
            .collect();
        let gcd = scaled
            .iter()
            .fold(BigInt::from(0), |acc, v| acc.gcd(v));
        scaled
            .into_iter()
            .map(|v| Rational::from_integer(v / &gcd))
            .collect()
    }
}

/// One strategy-relabeling permutation per player.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Renaming(Vec<Permutation>);

impl Renaming {
    pub fn new(perms: Vec<Permutation>) -> Self {
        assert!(!perms.is_empty());
        let kappa = perms[0].n();
        assert!(perms.iter().all(|p| p.n() == kappa));
        Renaming(perms)
    }

    pub fn identity(n: usize, kappa: usize) -> Self {
        Renaming(vec![Permutation::identity(kappa); n])
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Γ_r = P_{r_1} ⊗ P_{r_2} ⊗ ⋯ ⊗ P_{r_n}.
    pub fn gamma(&self) -> LogicalMatrix {
        let mut out = self.0[0].structure_matrix();
        for r in &self.0[1..] {
            out = out.kron(&r.structure_matrix());
        }
        out
    }
}

/// φ(σ) = P_σ ⊗ T_σ, the ordinary representation on structure vectors.
pub fn rep_ordinary(sigma: &Permutation, kappa: usize) -> RationalMatrix {
    rep_ordinary_logical(sigma, kappa).to_dense()
}

fn rep_ordinary_logical(sigma: &Permutation, kappa: usize) -> LogicalMatrix {
    sigma.structure_matrix().kron(&t_sigma(sigma, kappa))
}

/// φ^μ(σ) = Γ (P_σ ⊗ T_σ) Γ^{-1} with Γ = diag(μ) ⊗ I_{κ^n} scaling block i
/// by μ_i.
pub fn rep_weighted(sigma: &Permutation, weights: &Weights, kappa: usize) -> RationalMatrix {
    let n = sigma.n();
    assert_eq!(weights.len(), n, "one weight per player");
    let k = kappa.pow(n as u32);
    let base = rep_ordinary_logical(sigma, kappa);
    // entry (i,j) of Γ A Γ^{-1} is μ_{block(i)} A_{ij} / μ_{block(j)}
    let mu = weights.as_slice();
    let mut out = RationalMatrix::zeros(n * k, n * k);
    for (j, &row1) in base.col_indices().iter().enumerate() {
        let i = row1 - 1;
        out.set(i, j, &mu[i / k] / &mu[j / k]);
    }
    out
}

/// T^r_σ = Γ_r^T T_σ Γ_r.
pub fn t_sigma_renamed(sigma: &Permutation, renaming: &Renaming, kappa: usize) -> LogicalMatrix {
    let gamma = renaming.gamma();
    gamma.inverse().mul(&t_sigma(sigma, kappa)).mul(&gamma)
}

/// φ^r(σ) = P_σ ⊗ T^r_σ, the renaming representation.
pub fn rep_renaming(sigma: &Permutation, renaming: &Renaming, kappa: usize) -> RationalMatrix {
    sigma
        .structure_matrix()
        .kron(&t_sigma_renamed(sigma, renaming, kappa))
        .to_dense()
}

/// φ^n(θ) = P_{π_θ} ⊗ T^θ, the strategy-symmetry representation.
pub fn rep_strategy(theta: &BlockPermutation) -> RationalMatrix {
    theta
        .pi()
        .structure_matrix()
        .kron(&t_theta(theta))
        .to_dense()
}

/// V_G(P_σ ⊗ T) = V_G unpacked block-wise: V^c_i = V^c_{σ(i)} T for every i.
fn invariant_under(game: &Game, sigma: &Permutation, t: &LogicalMatrix) -> bool {
    (1..=game.n()).all(|i| {
        let moved = row_times_logical(game.payoff_vector(sigma.apply(i)), t);
        moved == game.payoff_vector(i)
    })
}

/// Ordinary symmetry: V_G (P_σ ⊗ T_σ) = V_G for all σ, checked over the
/// transposition generators.
pub fn check_ordinary(game: &Game) -> bool {
    if game.n() == 1 {
        return true;
    }
    transposition_generators(game.n())
        .iter()
        .all(|omega| invariant_under(game, omega, &t_sigma(omega, game.kappa())))
}

fn scaled_game(game: &Game, factors: &[Rational]) -> Game {
    let payoffs = game
        .payoff_vectors()
        .iter()
        .zip(factors)
        .map(|(row, f)| row.iter().map(|v| v * f).collect())
        .collect();
    Game::new(game.n(), game.kappa(), payoffs).expect("same shape as input")
}

/// Weighted symmetry with respect to μ: invariance under Γ(P_σ⊗T_σ)Γ^{-1},
/// equivalently ordinary symmetry of the modified game with payoffs μ_i c_i.
pub fn check_weighted(game: &Game, weights: &Weights) -> Result<bool, SymmetryError> {
    if weights.len() != game.n() {
        return Err(SymmetryError::WeightCount {
            expected: game.n(),
            got: weights.len(),
        });
    }
    Ok(check_ordinary(&scaled_game(game, weights.as_slice())))
}

/// Result of weight inference.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightInference {
    /// Unique weights normalized to μ_1 = 1.
    Found(Weights),
    /// No positive weights make the game weighted symmetric.
    NotWeighted,
    /// V^c_1 = 0: the ratio equations degenerate and weights are undetermined.
    Degenerate,
}

/// Own-payoff symmetry of V^c_1:
/// V^c_1 [I_κ ⊗ (W_{[κ^{s-2},κ]} W_{[κ,κ^{s-1}]}) − I] = 0 for s = 2..n−1.
fn own_payoff_symmetric(v1: &[Rational], n: usize, kappa: usize) -> bool {
    for s in 2..n {
        let inner = crate::stp::swap_matrix(kappa.pow((s - 2) as u32), kappa)
            .to_dense()
            .stp(&crate::stp::swap_matrix(kappa, kappa.pow((s - 1) as u32)).to_dense())
            .to_logical()
            .expect("STP of swap matrices is logical");
        let m = LogicalMatrix::identity(kappa).kron(&inner);
        let padded = m.kron(&LogicalMatrix::identity(kappa.pow((n - s - 1) as u32)));
        if row_times_logical(v1, &padded) != v1 {
            return false;
        }
    }
    true
}

/// Infers weights from the cross-payoff ratios
/// V^c_i = e_i V^c_1 W_{[κ^{i-1},κ]} (with e_i = μ_1/μ_i), normalized to
/// μ_1 = 1.
pub fn infer_weights(game: &Game) -> WeightInference {
    let n = game.n();
    let kappa = game.kappa();
    let v1 = game.payoff_vector(1);
    if v1.iter().all(|v| v.is_zero()) {
        return WeightInference::Degenerate;
    }
    if !own_payoff_symmetric(v1, n, kappa) {
        return WeightInference::NotWeighted;
    }
    let mut mu = vec![Rational::one()];
    for i in 2..=n {
        let w = crate::stp::swap_matrix(kappa.pow((i - 1) as u32), kappa);
        let padded = w.kron(&LogicalMatrix::identity(kappa.pow((n - i) as u32)));
        let target = row_times_logical(v1, &padded);
        let vi = game.payoff_vector(i);
        let pivot = target
            .iter()
            .position(|v| !v.is_zero())
            .expect("permuted nonzero vector stays nonzero");
        let e_i = &vi[pivot] / &target[pivot];
        if !e_i.is_positive() {
            return WeightInference::NotWeighted;
        }
        let matches = vi
            .iter()
            .zip(&target)
            .all(|(left, right)| left == &(&e_i * right));
        if !matches {
            return WeightInference::NotWeighted;
        }
        mu.push(e_i.recip());
    }
    WeightInference::Found(Weights::new(mu).expect("ratios are positive"))
}

fn renamed_game(game: &Game, renaming: &Renaming) -> Game {
    // V^r_i = V^c_i Γ_r^T
    let gamma_t = renaming.gamma().inverse();
    let payoffs = game
        .payoff_vectors()
        .iter()
        .map(|row| row_times_logical(row, &gamma_t))
        .collect();
    Game::new(game.n(), game.kappa(), payoffs).expect("same shape as input")
}

/// Renaming symmetry with respect to r: invariance under P_σ ⊗ T^r_σ,
/// equivalently ordinary symmetry of the renamed game.
pub fn check_renaming(game: &Game, renaming: &Renaming) -> Result<bool, SymmetryError> {
    if renaming.len() != game.n() {
        return Err(SymmetryError::RenamingCount {
            expected: game.n(),
            got: renaming.len(),
        });
    }
    if let Some((player, perm)) = renaming
        .perms()
        .iter()
        .enumerate()
        .find(|(_, p)| p.n() != game.kappa())
    {
        return Err(SymmetryError::RenamingDegree {
            player: player + 1,
            expected: game.kappa(),
            got: perm.n(),
        });
    }
    Ok(check_ordinary(&renamed_game(game, renaming)))
}

/// First renaming (lexicographic over (S_κ)^n) that makes the game ordinary
/// symmetric, or `None`.
pub fn search_renaming(game: &Game) -> Result<Option<Renaming>, BoundExceeded> {
    search_renaming_bounded(game, DEFAULT_THETA_BOUND)
}

pub fn search_renaming_bounded(
    game: &Game,
    bound: u128,
) -> Result<Option<Renaming>, BoundExceeded> {
    let n = game.n();
    let kappa = game.kappa();
    let fact = |m: usize| (1..=m as u128).product::<u128>();
    let required = fact(kappa).pow(n as u32);
    if required > bound {
        return Err(BoundExceeded { required, bound });
    }
    let s_kappa = crate::group::enumerate_sn_bounded(kappa, kappa).expect("explicit bound");
    let mut picks = vec![0usize; n];
    loop {
        let r = Renaming::new(picks.iter().map(|&k| s_kappa[k].clone()).collect());
        if check_renaming(game, &r).expect("renaming has matching shape") {
            return Ok(Some(r));
        }
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(None);
            }
            picks[pos - 1] += 1;
            if picks[pos - 1] < s_kappa.len() {
                break;
            }
            picks[pos - 1] = 0;
            pos -= 1;
        }
    }
}

/// Strategy symmetry of one block permutation: V^c_i = V^c_{π_θ(i)} T^θ.
pub fn check_strategy_symmetry(game: &Game, theta: &BlockPermutation) -> bool {
    assert_eq!(theta.n(), game.n());
    assert_eq!(theta.kappa(), game.kappa());
    let t = t_theta(theta);
    invariant_under(game, theta.pi(), &t)
}

/// Θ(G): all strategy symmetries of the game, in enumeration order.
pub fn strategy_symmetry_group(game: &Game) -> Result<Vec<BlockPermutation>, BoundExceeded> {
    strategy_symmetry_group_bounded(game, DEFAULT_THETA_BOUND)
}

pub fn strategy_symmetry_group_bounded(
    game: &Game,
    bound: u128,
) -> Result<Vec<BlockPermutation>, BoundExceeded> {
    let all = enumerate_theta_bounded(game.n(), game.kappa(), bound)?;
    Ok(all
        .into_iter()
        .filter(|theta| check_strategy_symmetry(game, theta))
        .collect())
}

/// Name-irrelevant symmetry: every player permutation arises as π_θ for some
/// strategy symmetry θ, i.e. Π(G) = S_n.
pub fn check_name_irrelevant(game: &Game) -> Result<bool, BoundExceeded> {
    check_name_irrelevant_bounded(game, DEFAULT_THETA_BOUND)
}

pub fn check_name_irrelevant_bounded(game: &Game, bound: u128) -> Result<bool, BoundExceeded> {
    let group = strategy_symmetry_group_bounded(game, bound)?;
    let shadows: HashSet<&Permutation> = group.iter().map(|theta| theta.pi()).collect();
    let order: usize = (1..=game.n()).product();
    Ok(shadows.len() == order)
}

/// Which invariance the symmetric-subspace basis is computed for.
#[derive(Debug, Clone)]
pub enum SymmetryKind {
    Ordinary,
    Weighted(Weights),
    Renaming(Renaming),
}

pub const DEFAULT_BASIS_BOUND: u128 = 4096;

/// Canonical basis (reduced row-echelon form, rows ordered by pivot) of
/// {V : V(φ(ω) − I) = 0 for all generators ω} inside the nκ^n-dimensional
/// space of structure vectors.
pub fn symmetric_subspace_basis(
    n: usize,
    kappa: usize,
    kind: &SymmetryKind,
) -> Result<Vec<Vec<Rational>>, BoundExceeded> {
    symmetric_subspace_basis_bounded(n, kappa, kind, DEFAULT_BASIS_BOUND)
}

pub fn symmetric_subspace_basis_bounded(
    n: usize,
    kappa: usize,
    kind: &SymmetryKind,
    bound: u128,
) -> Result<Vec<Vec<Rational>>, BoundExceeded> {
    let dim = n * kappa.pow(n as u32);
    if dim as u128 > bound {
        return Err(BoundExceeded {
            required: dim as u128,
            bound,
        });
    }
    if n == 1 {
        // S_1 is trivial; the whole space is symmetric
        return Ok((0..dim)
            .map(|i| {
                let mut row = vec![Rational::zero(); dim];
                row[i] = Rational::one();
                row
            })
            .collect());
    }
    let identity = RationalMatrix::identity(dim);
    let mut constraint: Option<RationalMatrix> = None;
    for omega in transposition_generators(n) {
        let rep = match kind {
            SymmetryKind::Ordinary => rep_ordinary(&omega, kappa),
            SymmetryKind::Weighted(w) => rep_weighted(&omega, w, kappa),
            SymmetryKind::Renaming(r) => rep_renaming(&omega, r, kappa),
        };
        let block = rep.sub(&identity).transpose();
        constraint = Some(match constraint {
            None => block,
            Some(prev) => prev.vstack(&block),
        });
    }
    Ok(nullspace(&constraint.expect("n >= 2 has generators")))
}
