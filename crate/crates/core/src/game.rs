//! Finite games in G_{[n;κ]} as structure vectors, profile indexing, the Φ
//! converter between STP and stacked vector forms, and the permutation
//! factors T_σ and T^θ acting on profiles.
//!
//! Strategy labels run 1..=κ and the vector form of label s is δ_κ^s. For
//! Boolean games (κ = 2) label 1 is logical 1 and label 2 is logical 0, so
//! negation is M_n = δ_2[2,1]. Profiles are indexed with player 1 most
//! significant: `index = 1 + Σ (s_i − 1) κ^{n−i}`.

use crate::group::{BlockPermutation, Permutation};
use crate::rational::Rational;
use crate::stp::{LogicalMatrix, RationalMatrix};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GameError {
    BadPlayerCount,
    BadStrategyCount,
    PayoffCount { expected: usize, got: usize },
    PayoffLength { player: usize, expected: usize, got: usize },
}

impl fmt::Display for GameError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GameError::BadPlayerCount => write!(f, "need at least one player"),
            GameError::BadStrategyCount => write!(f, "need at least two strategies per player"),
            GameError::PayoffCount { expected, got } => {
                write!(f, "expected {expected} payoff vectors, got {got}")
            }
            GameError::PayoffLength {
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

impl std::error::Error for GameError {}

/// Strategy profile: one label in 1..=κ per player.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Profile(pub Vec<usize>);

impl Profile {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// 1-based position of the profile's STP form `⋉ δ_κ^{s_i}` in Δ_{κ^n}.
pub fn profile_to_index(profile: &Profile, kappa: usize) -> usize {
    let mut index = 0;
    for &s in &profile.0 {
        debug_assert!((1..=kappa).contains(&s));
        index = index * kappa + (s - 1);
    }
    index + 1
}

pub fn index_to_profile(index: usize, n: usize, kappa: usize) -> Profile {
    debug_assert!((1..=kappa.pow(n as u32)).contains(&index));
    let mut rem = index - 1;
    let mut strategies = vec![0; n];
    for i in (0..n).rev() {
        strategies[i] = rem % kappa + 1;
        rem /= kappa;
    }
    Profile(strategies)
}

/// All κ^n profiles in index order.
pub fn all_profiles(n: usize, kappa: usize) -> impl Iterator<Item = Profile> {
    (1..=kappa.pow(n as u32)).map(move |i| index_to_profile(i, n, kappa))
}

/// Finite game with a common strategy count: n payoff structure vectors
/// V^c_i ∈ Q^{κ^n}, stored as rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    n: usize,
    kappa: usize,
    payoffs: Vec<Vec<Rational>>,
}

impl Game {
    pub fn new(n: usize, kappa: usize, payoffs: Vec<Vec<Rational>>) -> Result<Self, GameError> {
        if n < 1 {
            return Err(GameError::BadPlayerCount);
        }
        if kappa < 2 {
            return Err(GameError::BadStrategyCount);
        }
        if payoffs.len() != n {
            return Err(GameError::PayoffCount {
                expected: n,
                got: payoffs.len(),
            });
        }
        let k = kappa.pow(n as u32);
        for (i, row) in payoffs.iter().enumerate() {
            if row.len() != k {
                return Err(GameError::PayoffLength {
                    player: i + 1,
                    expected: k,
                    got: row.len(),
                });
            }
        }
        Ok(Game { n, kappa, payoffs })
    }

    pub fn zero(n: usize, kappa: usize) -> Self {
        let k = kappa.pow(n as u32);
        Game {
            n,
            kappa,
            payoffs: vec![vec![Rational::from_integer(0.into()); k]; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kappa(&self) -> usize {
        self.kappa
    }

    pub fn profile_count(&self) -> usize {
        self.kappa.pow(self.n as u32)
    }

    /// Structure vector V^c_i of player `i` (1-based).
    pub fn payoff_vector(&self, i: usize) -> &[Rational] {
        &self.payoffs[i - 1]
    }

    pub fn payoff_vectors(&self) -> &[Vec<Rational>] {
        &self.payoffs
    }

    /// c_i evaluated at a profile: the profile-indexed entry of V^c_i.
    pub fn payoff(&self, i: usize, profile: &Profile) -> &Rational {
        assert!((1..=self.n).contains(&i), "player index out of range");
        assert_eq!(profile.len(), self.n);
        &self.payoffs[i - 1][profile_to_index(profile, self.kappa) - 1]
    }

    /// V_G: the n structure vectors concatenated into one row of length nκ^n.
    pub fn structure_vector(&self) -> Vec<Rational> {
        self.payoffs.iter().flatten().cloned().collect()
    }
}

/// Strategy multiplicity vector: entry j counts how many players of the
/// profile (optionally excluding one) play label j.
pub fn multiplicity_vector(profile: &Profile, exclude: Option<usize>, kappa: usize) -> Vec<usize> {
    let mut counts = vec![0; kappa];
    for (pos, &s) in profile.0.iter().enumerate() {
        if exclude == Some(pos + 1) {
            continue;
        }
        counts[s - 1] += 1;
    }
    counts
}

/// Φ_i = 1^T_{κ^{i-1}} ⊗ I_κ ⊗ 1^T_{κ^{n-i}}: picks the vector form of the
/// i-th strategy out of the STP profile form.
pub fn phi_i(n: usize, kappa: usize, i: usize) -> LogicalMatrix {
    assert!((1..=n).contains(&i), "player index out of range");
    let total = kappa.pow(n as u32);
    let tail = kappa.pow((n - i) as u32);
    let indices = (0..total).map(|x| (x / tail) % kappa + 1).collect();
    LogicalMatrix::new(kappa, indices)
}

/// The stacked converter Φ with `vec(x) = Φ x` (Boolean matrix, nκ × κ^n).
pub fn phi(n: usize, kappa: usize) -> RationalMatrix {
    let mut out = phi_i(n, kappa, 1).to_dense();
    for i in 2..=n {
        out = out.vstack(&phi_i(n, kappa, i).to_dense());
    }
    out
}

/// T_σ = Φ_{σ^{-1}(1)} * Φ_{σ^{-1}(2)} * ⋯ * Φ_{σ^{-1}(n)}, the logical
/// matrix with σ(x) = T_σ x where σ(x) reorders the STP factors.
pub fn t_sigma(sigma: &Permutation, kappa: usize) -> LogicalMatrix {
    let n = sigma.n();
    let sigma_inv = sigma.inverse();
    let mut out = phi_i(n, kappa, sigma_inv.apply(1));
    for i in 2..=n {
        out = khatri_rao_logical(&out, &phi_i(n, kappa, sigma_inv.apply(i)));
    }
    out
}

/// Khatri-Rao product of logical factors, index-wise.
fn khatri_rao_logical(a: &LogicalMatrix, b: &LogicalMatrix) -> LogicalMatrix {
    assert_eq!(a.cols(), b.cols());
    let p = b.rows();
    let indices = (0..a.cols())
        .map(|j| (a.col_index(j) - 1) * p + b.col_index(j))
        .collect();
    LogicalMatrix::new(a.rows() * p, indices)
}

/// T^θ = (D^θ_1 ⊗ ⋯ ⊗ D^θ_n) · T_{π_θ} for a block permutation θ.
pub fn t_theta(theta: &BlockPermutation) -> LogicalMatrix {
    let kappa = theta.kappa();
    let mut d_kron = theta.d()[0].structure_matrix();
    for di in &theta.d()[1..] {
        d_kron = d_kron.kron(&di.structure_matrix());
    }
    d_kron.mul(&t_sigma(theta.pi(), kappa))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::stp::row_times_logical;

    fn game_from_i64(n: usize, kappa: usize, rows: &[&[i64]]) -> Game {
        Game::new(
            n,
            kappa,
            rows.iter()
                .map(|r| r.iter().map(|&v| rat(v)).collect())
                .collect(),
        )
        .unwrap()
    }

    pub(crate) fn matching_pennies() -> Game {
        game_from_i64(2, 2, &[&[1, -1, -1, 1], &[-1, 1, 1, -1]])
    }

    #[test]
    fn profile_indexing() {
        assert_eq!(profile_to_index(&Profile(vec![1, 1, 1]), 2), 1);
        assert_eq!(profile_to_index(&Profile(vec![2, 1]), 2), 3);
        assert_eq!(profile_to_index(&Profile(vec![1, 2, 3]), 3), 6);
        for n in 1..=5usize {
            for kappa in 2..=3usize {
                if kappa.pow(n as u32) > 300 {
                    continue;
                }
                for idx in 1..=kappa.pow(n as u32) {
                    let p = index_to_profile(idx, n, kappa);
                    assert_eq!(profile_to_index(&p, kappa), idx);
                }
            }
        }
    }

    #[test]
    fn payoff_lookup_matches_tables() {
        let mp = matching_pennies();
        assert_eq!(mp.payoff(1, &Profile(vec![1, 1])), &rat(1));
        assert_eq!(mp.payoff(2, &Profile(vec![1, 2])), &rat(1));
        // Battle of the Sexes: c_2 at (2,2) is 2
        let bos = game_from_i64(2, 2, &[&[2, 0, 0, 1], &[1, 0, 0, 2]]);
        assert_eq!(bos.payoff(2, &Profile(vec![2, 2])), &rat(2));
        let zero = Game::zero(2, 3);
        for p in all_profiles(2, 3) {
            assert_eq!(zero.payoff(1, &p), &rat(0));
        }
    }

    #[test]
    fn game_validation() {
        assert!(Game::new(2, 2, vec![vec![rat(0); 4]]).is_err());
        assert!(Game::new(2, 2, vec![vec![rat(0); 3], vec![rat(0); 4]]).is_err());
        assert!(Game::new(2, 1, vec![vec![rat(0); 1], vec![rat(0); 1]]).is_err());
    }

    #[test]
    fn multiplicity_vectors() {
        assert_eq!(multiplicity_vector(&Profile(vec![1, 1, 2]), None, 2), vec![2, 1]);
        assert_eq!(
            multiplicity_vector(&Profile(vec![1, 2, 3]), Some(2), 3),
            vec![1, 0, 1]
        );
        assert_eq!(
            multiplicity_vector(&Profile(vec![1, 1, 1, 1]), None, 2),
            vec![4, 0]
        );
    }

    #[test]
    fn phi_small_cases() {
        assert_eq!(phi_i(2, 2, 1), LogicalMatrix::new(2, vec![1, 1, 2, 2]));
        assert_eq!(phi_i(2, 2, 2), LogicalMatrix::new(2, vec![1, 2, 1, 2]));
        assert_eq!(phi_i(1, 3, 1), LogicalMatrix::identity(3));
    }

    #[test]
    fn phi_converts_stp_form_to_vector_form() {
        // Φ·δ at a profile stacks the vector forms of its components
        let (n, kappa) = (3usize, 2usize);
        let big_phi = phi(n, kappa);
        for p in all_profiles(n, kappa) {
            let idx = profile_to_index(&p, kappa);
            for i in 1..=n {
                for s in 1..=kappa {
                    let entry = big_phi.get((i - 1) * kappa + s - 1, idx - 1);
                    let expected = if p.0[i - 1] == s { rat(1) } else { rat(0) };
                    assert_eq!(entry, &expected);
                }
            }
        }
    }

    #[test]
    fn t_sigma_identity_and_swap() {
        let id = Permutation::identity(3);
        assert_eq!(t_sigma(&id, 2), LogicalMatrix::identity(8));
        let swap = Permutation::parse(2, "(1,2)").unwrap();
        assert_eq!(t_sigma(&swap, 2), crate::stp::swap_matrix(2, 2));
    }

    #[test]
    fn t_sigma_example_247() {
        let sigma2 = Permutation::parse(3, "(2,3)").unwrap();
        let expected = vec![
            1, 4, 7, 2, 5, 8, 3, 6, 9, 10, 13, 16, 11, 14, 17, 12, 15, 18, 19, 22, 25, 20, 23,
            26, 21, 24, 27,
        ];
        assert_eq!(t_sigma(&sigma2, 3).col_indices(), expected.as_slice());
    }

    #[test]
    fn t_sigma_reorders_profiles() {
        // column at profile s is δ at the profile (s_{σ^{-1}(1)},…,s_{σ^{-1}(n)})
        let kappa = 2;
        for sigma in crate::group::enumerate_sn(3).unwrap() {
            let t = t_sigma(&sigma, kappa);
            let sigma_inv = sigma.inverse();
            for p in all_profiles(3, kappa) {
                let moved = Profile((1..=3).map(|i| p.0[sigma_inv.apply(i) - 1]).collect());
                assert_eq!(
                    t.col_index(profile_to_index(&p, kappa) - 1),
                    profile_to_index(&moved, kappa)
                );
            }
        }
    }

    #[test]
    fn t_is_a_homomorphism() {
        for kappa in 2..=3usize {
            let s3 = crate::group::enumerate_sn(3).unwrap();
            for mu in &s3 {
                for sigma in &s3 {
                    assert_eq!(
                        t_sigma(&mu.compose(sigma), kappa),
                        t_sigma(mu, kappa).mul(&t_sigma(sigma, kappa))
                    );
                }
            }
        }
    }

    #[test]
    fn stacked_phi_identity() {
        // stacking Φ_{σ^{-1}(i)} equals (P_σ ⊗ I_κ)·Φ, the STP P_σ ⋉ Φ
        let (n, kappa) = (3usize, 3usize);
        for sigma in crate::group::enumerate_sn(n).unwrap() {
            let sigma_inv = sigma.inverse();
            let mut stacked = phi_i(n, kappa, sigma_inv.apply(1)).to_dense();
            for i in 2..=n {
                stacked = stacked.vstack(&phi_i(n, kappa, sigma_inv.apply(i)).to_dense());
            }
            let via_stp = sigma.structure_matrix().to_dense().stp(&phi(n, kappa));
            assert_eq!(stacked, via_stp);
        }
    }

    #[test]
    fn t_theta_examples() {
        let id = BlockPermutation::identity(3, 3);
        assert_eq!(t_theta(&id), LogicalMatrix::identity(27));

        // β from the worked 3×3 example
        let beta = BlockPermutation::from_full(
            &Permutation::parse(9, "(1,2,3)(4,9,6,8)(5,7)").unwrap(),
            3,
            3,
        )
        .unwrap();
        let expected = vec![
            15, 12, 18, 13, 10, 16, 14, 11, 17, 24, 21, 27, 22, 19, 25, 23, 20, 26, 6, 3, 9, 4,
            1, 7, 5, 2, 8,
        ];
        assert_eq!(t_theta(&beta).col_indices(), expected.as_slice());

        // trivial π reduces T^θ to the Kronecker of the block maps
        let d1 = Permutation::parse(2, "(1,2)").unwrap();
        let theta = BlockPermutation::new(
            Permutation::identity(2),
            vec![d1.clone(), Permutation::identity(2)],
        );
        assert_eq!(
            t_theta(&theta),
            d1.structure_matrix()
                .kron(&Permutation::identity(2).structure_matrix())
        );
    }

    #[test]
    fn t_theta_with_identity_blocks_is_t_sigma() {
        for theta in crate::group::enumerate_theta(3, 2).unwrap() {
            if theta.d().iter().all(|d| d.is_identity()) {
                assert_eq!(t_theta(&theta), t_sigma(theta.pi(), theta.kappa()));
            }
        }
    }

    #[test]
    fn structure_vector_concatenates_payoffs() {
        let mp = matching_pennies();
        let vg = mp.structure_vector();
        assert_eq!(vg.len(), 8);
        assert_eq!(&vg[..4], mp.payoff_vector(1));
        assert_eq!(&vg[4..], mp.payoff_vector(2));
        // row-gather check: V^c_1 · T_{(1,2)} = V^c_2 for matching pennies? No:
        // matching pennies is *not* ordinary symmetric; the gather gives -V^c_2.
        let t = t_sigma(&Permutation::parse(2, "(1,2)").unwrap(), 2);
        let moved = row_times_logical(mp.payoff_vector(1), &t);
        let neg: Vec<_> = mp.payoff_vector(2).iter().map(|v| -v).collect();
        assert_eq!(moved, neg);
    }
}
