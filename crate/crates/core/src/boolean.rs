//! Boolean-game (κ = 2) specializations: the H_n basis of the symmetric
//! subspace, membership tests via the stacked swap system, the K_n
//! certificate matrix, closed-form potentials for ordinary/weighted/renaming
//! symmetric Boolean games, and negation-symmetric games.
//!
//! Label 1 is logical 1 (δ_2^1) and label 2 is logical 0, so negation is
//! M_n = δ_2[2,1].

use crate::game::Game;
use crate::linalg::solve;
use crate::potential::PotentialCertificate;
use crate::rational::Rational;
use crate::stp::{negation_matrix, row_times_logical, swap_matrix, LogicalMatrix, RationalMatrix};
use crate::symmetry::{check_weighted, Weights};
use num_traits::{One, Zero};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BooleanError {
    NotBoolean { kappa: usize },
    NotWeightedSymmetric,
    NotNegationSymmetric,
}

impl fmt::Display for BooleanError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BooleanError::NotBoolean { kappa } => {
                write!(f, "Boolean constructions need κ = 2, got κ = {kappa}")
            }
            BooleanError::NotWeightedSymmetric => {
                write!(f, "game is not weighted symmetric for the given weights")
            }
            BooleanError::NotNegationSymmetric => write!(f, "game is not negation-symmetric"),
        }
    }
}

impl std::error::Error for BooleanError {}

/// T_n ∈ B_{2^{n-1} × n}: T_2 = I_2 and T_{k+1} stacks two shifted copies of
/// T_k sharing the middle columns.
pub fn build_tn(n: usize) -> RationalMatrix {
    assert!(n >= 2, "T_n is defined for n >= 2");
    let mut t = RationalMatrix::identity(2);
    for k in 2..n {
        let rows = t.rows();
        let zeros = RationalMatrix::zeros(rows, 1);
        let top = t.hstack(&zeros);
        let bottom = zeros.hstack(&t);
        t = top.vstack(&bottom);
        debug_assert_eq!(t.rows(), 1 << k);
        debug_assert_eq!(t.cols(), k + 1);
    }
    t
}

/// H_n = I_2 ⊗ T_n ∈ B_{2^n × 2n}, whose columns form a basis of the
/// admissible V^c_1 of symmetric Boolean games.
pub fn build_hn(n: usize) -> RationalMatrix {
    RationalMatrix::identity(2).kron(&build_tn(n))
}

/// R_n ∈ M_{2^{n-1} × (n-1)}: R_2 = δ_2^1 and
/// R_{t+1} = [[R_t, 1],[0, R_t]].
pub fn build_rn(n: usize) -> RationalMatrix {
    assert!(n >= 2, "R_n is defined for n >= 2");
    let mut r = RationalMatrix::new(2, 1, vec![Rational::one(), Rational::zero()]);
    for t in 2..n {
        let rows = r.rows();
        let top = r.hstack(&RationalMatrix::ones(rows, 1));
        let bottom = RationalMatrix::zeros(rows, 1).hstack(&r);
        r = top.vstack(&bottom);
        debug_assert_eq!(r.rows(), 1 << t);
        debug_assert_eq!(r.cols(), t);
    }
    r
}

/// Q_n = [0, −R_n, R_n, 0] ∈ M_{2^{n-1} × 2n}.
pub fn build_qn(n: usize) -> RationalMatrix {
    let r = build_rn(n);
    let zero_col = RationalMatrix::zeros(r.rows(), 1);
    zero_col.hstack(&r.neg()).hstack(&r).hstack(&zero_col)
}

/// First block K_n^1 of the certificate matrix. For n ≥ 3 this is Q_n. At
/// n = 2 the gauge representative differs: Q_2 shifted by 1_2·δ_{2n}^2, the
/// block whose potential formula reproduces the worked 2-player examples.
pub fn kn_first_block(n: usize) -> RationalMatrix {
    assert!(n >= 2, "K_n is defined for n >= 2");
    if n == 2 {
        let z = Rational::zero;
        let one = Rational::one;
        return RationalMatrix::new(2, 4, vec![z(), z(), one(), z(), z(), one(), z(), z()]);
    }
    build_qn(n)
}

/// K_n = 1_n ⊗ K_n^1 ∈ M_{n·2^{n-1} × 2n}: an explicit solution of the
/// equation E(n)·K_n = B(n)·H_n.
pub fn build_kn(n: usize) -> RationalMatrix {
    let block = kn_first_block(n);
    let mut out = block.clone();
    for _ in 1..n {
        out = out.vstack(&block);
    }
    out
}

/// The stacked difference matrix B(n): row blocks
/// −I_{2^n} + W_{[2,2^{i-1}]} ⊗ I_{2^{n-i}} for i = 2..n.
pub fn build_bn(n: usize) -> RationalMatrix {
    assert!(n >= 2);
    let size = 1 << n;
    let identity = RationalMatrix::identity(size);
    let mut out: Option<RationalMatrix> = None;
    for i in 2..=n {
        let w = swap_matrix(2, 1 << (i - 1))
            .kron(&LogicalMatrix::identity(1 << (n - i)))
            .to_dense();
        let block = w.sub(&identity);
        out = Some(match out {
            None => block,
            Some(prev) => prev.vstack(&block),
        });
    }
    out.expect("n >= 2 yields at least one block")
}

/// Ψ = H_n^T − (K_n^1)^T E_1^T, the 2n × 2^n matrix sending coordinates v to
/// the potential V^P = v^T Ψ.
pub fn psi_matrix(n: usize) -> RationalMatrix {
    let hn_t = build_hn(n).transpose();
    let k1_t = kn_first_block(n).transpose();
    let e1_t = RationalMatrix::ones(2, 1)
        .kron(&RationalMatrix::identity(1 << (n - 1)))
        .transpose();
    hn_t.sub(&k1_t.mul(&e1_t))
}

fn require_boolean(game: &Game) -> Result<(), BooleanError> {
    if game.kappa() != 2 {
        return Err(BooleanError::NotBoolean {
            kappa: game.kappa(),
        });
    }
    Ok(())
}

/// Solves the stacked system
/// [W_{[2,2^{i-1}]} ⊗ I]_{i=1..n} H_n v = V_G^T for the coordinate vector
/// v ∈ Q^{2n}; `None` when the game is not ordinary symmetric. The verdict
/// coincides with `symmetry::check_ordinary`.
pub fn check_symmetric_boolean(game: &Game) -> Option<Vec<Rational>> {
    assert_eq!(game.kappa(), 2, "Boolean membership needs κ = 2");
    let n = game.n();
    assert!(n >= 2, "the H_n construction needs n >= 2");
    let hn = build_hn(n);
    let mut stacked: Option<RationalMatrix> = None;
    for i in 1..=n {
        let w = swap_matrix(2, 1 << (i - 1)).kron(&LogicalMatrix::identity(1 << (n - i)));
        let block = w.to_dense().mul(&hn);
        stacked = Some(match stacked {
            None => block,
            Some(prev) => prev.vstack(&block),
        });
    }
    let rhs = game.structure_vector();
    solve(&stacked.expect("n >= 1"), &rhs)
}

/// Closed-form potential of a symmetric Boolean game from its coordinates:
/// V^P = v^T (H_n^T − (K_n^1)^T E_1^T).
pub fn symmetric_boolean_potential(coords: &[Rational], n: usize) -> Vec<Rational> {
    assert_eq!(coords.len(), 2 * n, "coordinates live in Q^{{2n}}");
    let psi = psi_matrix(n);
    let row = RationalMatrix::row_vector(coords.to_vec()).mul(&psi);
    row.row(0).to_vec()
}

/// Potential of a weighted symmetric Boolean game via the modified game
/// G^μ (payoffs μ_i c_i): returns the certificate for the original game with
/// weights w_i = 1/μ_i.
pub fn weighted_boolean_potential(
    game: &Game,
    mu: &Weights,
) -> Result<PotentialCertificate, BooleanError> {
    require_boolean(game)?;
    match check_weighted(game, mu) {
        Ok(true) => {}
        _ => return Err(BooleanError::NotWeightedSymmetric),
    }
    let n = game.n();
    let modified = Game::new(
        n,
        2,
        game.payoff_vectors()
            .iter()
            .zip(mu.as_slice())
            .map(|(row, m)| row.iter().map(|v| v * m).collect())
            .collect(),
    )
    .expect("same shape as input");
    let coords =
        check_symmetric_boolean(&modified).expect("weighted symmetry makes G^mu symmetric");
    let potential = symmetric_boolean_potential(&coords, n);
    // ξ for the weighted system: block i of K_n·v scaled by 1/μ_i
    let coords_col = RationalMatrix::col_vector(coords);
    let xi_block = kn_first_block(n).mul(&coords_col);
    let xi: Vec<Vec<Rational>> = mu
        .as_slice()
        .iter()
        .map(|m| (0..xi_block.rows()).map(|r| xi_block.get(r, 0) / m).collect())
        .collect();
    let weights = mu.as_slice().iter().map(|m| m.recip()).collect();
    Ok(PotentialCertificate {
        weights,
        xi,
        potential,
    })
}

/// Which algebraic form of the negation-symmetry membership test to use.
/// Both negate the strategies of players 1 and i jointly; under the
/// semi-tensor product they produce the same matrix, so the verdicts agree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum NegationRule {
    /// V^c_i = V^c_1 (M_n ⊗ I_{2^{i-2}} ⊗ M_n ⊗ I_{2^{n-i}}), the block form
    /// used in the potential construction.
    #[default]
    GammaBlock,
    /// V^c_i = V^c_1 ⋉ (I_{2^{i-1}} ⊗ M_n) ⋉ M_n, the right-factor chain.
    StpRightFactor,
}

/// Negation symmetry: jointly negating the strategies of players 1 and i
/// carries c_1 onto c_i, for every i ≥ 2.
pub fn check_negation_symmetric(game: &Game) -> bool {
    check_negation_symmetric_with(game, NegationRule::default())
}

pub fn check_negation_symmetric_with(game: &Game, rule: NegationRule) -> bool {
    assert_eq!(game.kappa(), 2, "negation symmetry needs κ = 2");
    let n = game.n();
    let v1 = game.payoff_vector(1);
    for i in 2..=n {
        let expected = match rule {
            NegationRule::GammaBlock => {
                let m = gamma_negation_block(n, i);
                row_times_logical(v1, &m)
            }
            NegationRule::StpRightFactor => {
                let factor = LogicalMatrix::identity(1 << (i - 1))
                    .kron(&negation_matrix())
                    .to_dense();
                let row = RationalMatrix::row_vector(v1.to_vec())
                    .stp(&factor)
                    .stp(&negation_matrix().to_dense());
                row.row(0).to_vec()
            }
        };
        if expected != game.payoff_vector(i) {
            return false;
        }
    }
    true
}

/// M_n ⊗ I_{2^{i-2}} ⊗ M_n ⊗ I_{2^{n-i}} for 2 ≤ i ≤ n.
pub(crate) fn gamma_negation_block(n: usize, i: usize) -> LogicalMatrix {
    negation_matrix()
        .kron(&LogicalMatrix::identity(1 << (i - 2)))
        .kron(&negation_matrix())
        .kron(&LogicalMatrix::identity(1 << (n - i)))
}

/// Closed-form potential V^P = −V^c_1 (M_n ⊗ I_{2^{n-1}}) of a
/// negation-symmetric Boolean game.
pub fn negation_potential(game: &Game) -> Result<Vec<Rational>, BooleanError> {
    require_boolean(game)?;
    if !check_negation_symmetric(game) {
        return Err(BooleanError::NotNegationSymmetric);
    }
    let n = game.n();
    let m = negation_matrix().kron(&LogicalMatrix::identity(1 << (n - 1)));
    Ok(row_times_logical(game.payoff_vector(1), &m)
        .into_iter()
        .map(|v| -v)
        .collect())
}
