//! Assembly and exact solving of the (weighted) potential equation
//! E^w(n) ξ = b^w(n), extraction of the potential structure vector, and the
//! renaming-potential variant.
//!
//! Unlike the rest of the crate this module accepts per-player strategy
//! counts k_1,…,k_n; the potential equation is stated at that generality.
//! Profiles are indexed with player 1 most significant.

use crate::game::Game;
use crate::linalg::solve;
use crate::rational::{all_positive, Rational};
use crate::stp::{row_times_logical, RationalMatrix};
use crate::symmetry::Renaming;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PotentialError {
    BadStrategyCounts,
    NonPositiveWeight,
    WeightCount { expected: usize, got: usize },
    PayoffCount { expected: usize, got: usize },
    PayoffLength { player: usize, expected: usize, got: usize },
}

impl fmt::Display for PotentialError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PotentialError::BadStrategyCounts => {
                write!(f, "need at least one player with at least two strategies each")
            }
            PotentialError::NonPositiveWeight => write!(f, "weights must be strictly positive"),
            PotentialError::WeightCount { expected, got } => {
                write!(f, "expected {expected} weights, got {got}")
            }
            PotentialError::PayoffCount { expected, got } => {
                write!(f, "expected {expected} payoff vectors, got {got}")
            }
            PotentialError::PayoffLength {
                player,
                expected,
                got,
            } => write!(
                f,
                "payoff vector of player {player} has length {got}, expected {expected}"
            ),
        }
    }
}

impl std::error::Error for PotentialError {}

/// A weighted-potential instance: per-player strategy counts, positive
/// weights and payoff structure vectors of length k = Πk_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PotentialProblem {
    strategy_counts: Vec<usize>,
    weights: Vec<Rational>,
    payoffs: Vec<Vec<Rational>>,
}

impl PotentialProblem {
    pub fn new(
        strategy_counts: Vec<usize>,
        weights: Vec<Rational>,
        payoffs: Vec<Vec<Rational>>,
    ) -> Result<Self, PotentialError> {
        let n = strategy_counts.len();
        if n == 0 || strategy_counts.iter().any(|&k| k < 2) {
            return Err(PotentialError::BadStrategyCounts);
        }
        if weights.len() != n {
            return Err(PotentialError::WeightCount {
                expected: n,
                got: weights.len(),
            });
        }
        if !all_positive(&weights) {
            return Err(PotentialError::NonPositiveWeight);
        }
        if payoffs.len() != n {
            return Err(PotentialError::PayoffCount {
                expected: n,
                got: payoffs.len(),
            });
        }
        let k: usize = strategy_counts.iter().product();
        for (i, row) in payoffs.iter().enumerate() {
            if row.len() != k {
                return Err(PotentialError::PayoffLength {
                    player: i + 1,
                    expected: k,
                    got: row.len(),
                });
            }
        }
        Ok(PotentialProblem {
            strategy_counts,
            weights,
            payoffs,
        })
    }

    pub fn unit_weights(
        strategy_counts: Vec<usize>,
        payoffs: Vec<Vec<Rational>>,
    ) -> Result<Self, PotentialError> {
        let n = strategy_counts.len();
        Self::new(strategy_counts, vec![Rational::one(); n], payoffs)
    }

    pub fn from_game(game: &Game, weights: Vec<Rational>) -> Result<Self, PotentialError> {
        Self::new(
            vec![game.kappa(); game.n()],
            weights,
            game.payoff_vectors().to_vec(),
        )
    }

    pub fn n(&self) -> usize {
        self.strategy_counts.len()
    }

    pub fn strategy_counts(&self) -> &[usize] {
        &self.strategy_counts
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn payoff_vector(&self, i: usize) -> &[Rational] {
        &self.payoffs[i - 1]
    }

    /// k = Π k_i, the profile count.
    pub fn profile_count(&self) -> usize {
        self.strategy_counts.iter().product()
    }

    /// k^{[i,j]} = Π_{s=i..=j} k_s (1 when i > j); 1-based bounds.
    fn k_range(&self, i: usize, j: usize) -> usize {
        if i > j {
            1
        } else {
            self.strategy_counts[i - 1..j].iter().product()
        }
    }

    /// Flat 0-based profile index assembled around player i: the profile is
    /// (pre, s_i, post) with pre ∈ 0..k^{[1,i-1]}, post ∈ 0..k^{[i+1,n]}.
    fn unstrike(&self, i: usize, pre: usize, s: usize, post: usize) -> usize {
        let tail = self.k_range(i + 1, self.n());
        (pre * self.strategy_counts[i - 1] + s) * tail + post
    }
}

/// E_i = I_{k^{[1,i-1]}} ⊗ 1_{k_i} ⊗ I_{k^{[i+1,n]}}, the k × (k/k_i) 0/1
/// matrix replicating a function of s_{-i} over player i's strategies.
pub fn build_ei(problem: &PotentialProblem, i: usize) -> RationalMatrix {
    let n = problem.n();
    assert!((1..=n).contains(&i), "player index out of range");
    let head = RationalMatrix::identity(problem.k_range(1, i - 1));
    let mid = RationalMatrix::ones(problem.strategy_counts[i - 1], 1);
    let tail = RationalMatrix::identity(problem.k_range(i + 1, n));
    head.kron(&mid).kron(&tail)
}

/// The full coefficient matrix E^w(n): row block j−1 (j = 2..n) is
/// [−w_j E_1, 0, …, w_1 E_j, …, 0].
pub fn potential_matrix(problem: &PotentialProblem) -> RationalMatrix {
    let n = problem.n();
    assert!(n >= 2, "the potential equation needs at least two players");
    let k = problem.profile_count();
    let w = problem.weights();
    let e1 = build_ei(problem, 1);
    let col_offsets: Vec<usize> = {
        let mut acc = 0;
        let mut offs = Vec::with_capacity(n);
        for i in 1..=n {
            offs.push(acc);
            acc += k / problem.strategy_counts[i - 1];
        }
        offs
    };
    let total_cols: usize = (1..=n).map(|i| k / problem.strategy_counts[i - 1]).sum();
    let mut out = RationalMatrix::zeros((n - 1) * k, total_cols);
    for j in 2..=n {
        let row_base = (j - 2) * k;
        for r in 0..k {
            for c in 0..e1.cols() {
                let v = e1.get(r, c);
                if !v.is_zero() {
                    out.set(row_base + r, col_offsets[0] + c, -(v * &w[j - 1]));
                }
            }
        }
        let ej = build_ei(problem, j);
        for r in 0..k {
            for c in 0..ej.cols() {
                let v = ej.get(r, c);
                if !v.is_zero() {
                    out.set(row_base + r, col_offsets[j - 1] + c, v * &w[0]);
                }
            }
        }
    }
    out
}

/// Right-hand side b^w(n): block j−1 is (w_1 V^c_j − w_j V^c_1)^T.
pub fn potential_rhs(problem: &PotentialProblem) -> Vec<Rational> {
    let n = problem.n();
    let w = problem.weights();
    let mut out = Vec::with_capacity((n - 1) * problem.profile_count());
    for j in 2..=n {
        let vj = problem.payoff_vector(j);
        let v1 = problem.payoff_vector(1);
        out.extend(
            vj.iter()
                .zip(v1)
                .map(|(cj, c1)| &w[0] * cj - &w[j - 1] * c1),
        );
    }
    out
}

/// Solution of the potential equation together with the resulting potential
/// structure vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PotentialCertificate {
    pub weights: Vec<Rational>,
    /// Solution blocks ξ_1,…,ξ_n with ξ_i ∈ Q^{k/k_i}.
    pub xi: Vec<Vec<Rational>>,
    /// V^P = (1/w_1)(V^c_1 − ξ_1^T E_1^T).
    pub potential: Vec<Rational>,
}

/// Potential extraction from a solved ξ_1: V^P[x] = (V^c_1[x] − ξ_1[x_{-1}])/w_1.
fn potential_from_xi1(problem: &PotentialProblem, xi1: &[Rational]) -> Vec<Rational> {
    let k = problem.profile_count();
    let tail = k / problem.strategy_counts[0];
    let w1 = &problem.weights()[0];
    (0..k)
        .map(|x| (&problem.payoff_vector(1)[x] - &xi1[x % tail]) / w1)
        .collect()
}

/// Solves the potential equation exactly. `None` means the game is not a
/// weighted potential game for these weights.
pub fn solve_potential(problem: &PotentialProblem) -> Option<PotentialCertificate> {
    let n = problem.n();
    let k = problem.profile_count();
    if n == 1 {
        // no cross-player constraints: P = c_1 / w_1
        let xi1 = vec![Rational::zero(); k / problem.strategy_counts[0]];
        let potential = potential_from_xi1(problem, &xi1);
        return Some(PotentialCertificate {
            weights: problem.weights().to_vec(),
            xi: vec![xi1],
            potential,
        });
    }
    let matrix = potential_matrix(problem);
    let rhs = potential_rhs(problem);
    let flat = solve(&matrix, &rhs)?;
    let mut xi = Vec::with_capacity(n);
    let mut offset = 0;
    for i in 1..=n {
        let len = k / problem.strategy_counts[i - 1];
        xi.push(flat[offset..offset + len].to_vec());
        offset += len;
    }
    let potential = potential_from_xi1(problem, &xi[0]);
    Some(PotentialCertificate {
        weights: problem.weights().to_vec(),
        xi,
        potential,
    })
}

/// Exhaustive check of the defining identity
/// c_i(x_i, s_{-i}) − c_i(y_i, s_{-i}) = w_i [P(x_i, s_{-i}) − P(y_i, s_{-i})]
/// over all players, opponent profiles and strategy pairs.
pub fn verify_potential(problem: &PotentialProblem, candidate: &[Rational]) -> bool {
    let n = problem.n();
    let k = problem.profile_count();
    if candidate.len() != k {
        return false;
    }
    for i in 1..=n {
        let ki = problem.strategy_counts[i - 1];
        let heads = problem.k_range(1, i - 1);
        let tails = problem.k_range(i + 1, n);
        let ci = problem.payoff_vector(i);
        let wi = &problem.weights()[i - 1];
        for pre in 0..heads {
            for post in 0..tails {
                for x in 0..ki {
                    for y in x + 1..ki {
                        let at_x = problem.unstrike(i, pre, x, post);
                        let at_y = problem.unstrike(i, pre, y, post);
                        let payoff_diff = &ci[at_x] - &ci[at_y];
                        let potential_diff = &candidate[at_x] - &candidate[at_y];
                        if payoff_diff != wi * &potential_diff {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Renaming-potential result: the potential of the renamed game and the
/// pulled-back certificate for the original game (unit weights).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenamingPotential {
    /// V^{P^r}, the potential structure vector of the renamed game.
    pub renamed_potential: Vec<Rational>,
    /// Certificate for the original game; its potential is V^P = V^{P^r} Γ_r.
    pub certificate: PotentialCertificate,
}

/// Solves E(n) ξ = (I_{n−1} ⊗ Γ_r) b(n) for the renamed game and pulls the
/// potential back to the original game via V^P = V^{P^r} Γ_r.
///
/// When the renamed game is an ordinary symmetric Boolean game the solution
/// is taken from the closed-form certificate ξ = K_n v instead of the
/// eliminator's free-variable choice; the two differ only by the all-ones
/// gauge, and the closed form is the representative the worked examples use.
pub fn solve_renaming_potential(game: &Game, renaming: &Renaming) -> Option<RenamingPotential> {
    assert_eq!(renaming.len(), game.n(), "one renaming per player");
    assert!(
        renaming.perms().iter().all(|p| p.n() == game.kappa()),
        "renamings must act on κ strategies"
    );
    let n = game.n();
    let gamma = renaming.gamma();
    let gamma_t = gamma.inverse();
    // renamed structure vectors V^r_i = V^c_i Γ_r^T
    let renamed = Game::new(
        n,
        game.kappa(),
        game.payoff_vectors()
            .iter()
            .map(|row| row_times_logical(row, &gamma_t))
            .collect(),
    )
    .expect("same shape as input");
    let renamed_cert = if game.kappa() == 2 && n >= 2 {
        match crate::boolean::check_symmetric_boolean(&renamed) {
            Some(coords) => {
                let potential = crate::boolean::symmetric_boolean_potential(&coords, n);
                let block = crate::boolean::kn_first_block(n)
                    .mul(&RationalMatrix::col_vector(coords));
                let xi_block: Vec<Rational> =
                    (0..block.rows()).map(|r| block.get(r, 0).clone()).collect();
                PotentialCertificate {
                    weights: vec![Rational::one(); n],
                    xi: vec![xi_block; n],
                    potential,
                }
            }
            None => {
                let problem =
                    PotentialProblem::from_game(&renamed, vec![Rational::one(); n])
                        .expect("valid game");
                solve_potential(&problem)?
            }
        }
    } else {
        let problem = PotentialProblem::from_game(&renamed, vec![Rational::one(); n])
            .expect("valid game");
        solve_potential(&problem)?
    };
    // pull back: V^P = V^{P^r} Γ_r
    let potential = row_times_logical(&renamed_cert.potential, &gamma);
    Some(RenamingPotential {
        renamed_potential: renamed_cert.potential.clone(),
        certificate: PotentialCertificate {
            weights: renamed_cert.weights.clone(),
            xi: renamed_cert.xi.clone(),
            potential,
        },
    })
}
