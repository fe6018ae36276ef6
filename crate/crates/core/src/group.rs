//! The symmetric group S_n (cycle notation, composition, structure matrices,
//! generators, enumeration) and the block-permutation group Θ_{[n;κ]} with
//! its (π; d_1,…,d_n) decomposition.
//!
//! Permutations are 1-indexed throughout. In a block permutation the grouped
//! object (i, α) with block i ∈ 1..=n and member α ∈ 1..=κ sits at flat index
//! (i−1)·κ + α.

use crate::stp::LogicalMatrix;
use crate::BoundExceeded;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PermError {
    OutOfRange { value: usize, n: usize },
    Repeated { value: usize },
    NotABijection,
    SizeMismatch { left: usize, right: usize },
    BadCycleText { text: String },
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::OutOfRange { value, n } => {
                write!(f, "entry {value} outside 1..={n}")
            }
            PermError::Repeated { value } => write!(f, "entry {value} repeated"),
            PermError::NotABijection => write!(f, "images are not a bijection"),
            PermError::SizeMismatch { left, right } => {
                write!(f, "permutation sizes differ ({left} vs {right})")
            }
            PermError::BadCycleText { text } => write!(f, "malformed cycle text `{text}`"),
        }
    }
}

impl std::error::Error for PermError {}

/// Element of S_n stored as its image sequence: `images[i-1] = σ(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1);
        Permutation {
            images: (1..=n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::NotABijection);
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v > n {
                return Err(PermError::OutOfRange { value: v, n });
            }
            if seen[v - 1] {
                return Err(PermError::Repeated { value: v });
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds σ ∈ S_n from disjoint cycles; elements in no cycle are fixed.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        assert!(n >= 1);
        let mut images: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for (k, &v) in cycle.iter().enumerate() {
                if v < 1 || v > n {
                    return Err(PermError::OutOfRange { value: v, n });
                }
                if used[v - 1] {
                    return Err(PermError::Repeated { value: v });
                }
                used[v - 1] = true;
                let next = cycle[(k + 1) % cycle.len()];
                images[v - 1] = next;
            }
        }
        Ok(Permutation { images })
    }

    /// Parses cycle text like `(1,3)(2,5)`; whitespace is ignored and `()`
    /// denotes the identity.
    pub fn parse(n: usize, text: &str) -> Result<Self, PermError> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || PermError::BadCycleText {
            text: text.to_string(),
        };
        if compact.is_empty() || compact == "()" || compact == "id" {
            return Ok(Self::identity(n));
        }
        let mut cycles = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(bad());
            }
            let close = rest.find(')').ok_or_else(bad)?;
            let inner = &rest[1..close];
            if !inner.is_empty() {
                let cycle = inner
                    .split(',')
                    .map(|t| t.parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>, _>>()?;
                cycles.push(cycle);
            }
            rest = &rest[close + 1..];
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// σ(i), 1-based.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    /// `self ∘ other`: `other` acts first, `(self∘other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            self.n(),
            other.n(),
            "cannot compose permutations of different sizes"
        );
        Permutation {
            images: other.images.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v - 1] = i + 1;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Disjoint-cycle form: each cycle starts at its smallest element, cycles
    /// ordered by that element, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] || self.apply(start) == start {
                seen[start - 1] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut cur = self.apply(start);
            while cur != start {
                seen[cur - 1] = true;
                cycle.push(cur);
                cur = self.apply(cur);
            }
            out.push(cycle);
        }
        out
    }

    /// Structure matrix `P_σ = [δ_n^{σ(1)}, …, δ_n^{σ(n)}]`.
    pub fn structure_matrix(&self) -> LogicalMatrix {
        LogicalMatrix::new(self.n(), self.images.clone())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            let parts: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

/// The generator set {(1,r) | 1 < r ≤ n} of S_n.
pub fn transposition_generators(n: usize) -> Vec<Permutation> {
    assert!(n >= 2, "S_n needs n >= 2 to have transpositions");
    (2..=n)
        .map(|r| Permutation::from_cycles(n, &[vec![1, r]]).expect("valid transposition"))
        .collect()
}

pub const DEFAULT_SN_BOUND: usize = 6;

/// All of S_n in lexicographic order of image sequences.
pub fn enumerate_sn(n: usize) -> Result<Vec<Permutation>, BoundExceeded> {
    enumerate_sn_bounded(n, DEFAULT_SN_BOUND)
}

pub fn enumerate_sn_bounded(n: usize, max_n: usize) -> Result<Vec<Permutation>, BoundExceeded> {
    assert!(n >= 1);
    if n > max_n {
        return Err(BoundExceeded {
            required: n as u128,
            bound: max_n as u128,
        });
    }
    let mut out = Vec::new();
    let mut images: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation {
            images: images.clone(),
        });
        if !next_permutation(&mut images) {
            break;
        }
    }
    Ok(out)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

/// Element of Θ_{[n;κ]} in the (π; d_1,…,d_n) form of its tuple expression:
/// block j is carried onto block π(j), and d_i ∈ S_κ is the within-block map
/// θ restricted to block π^{-1}(i), viewed as a map onto block i.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BlockPermutation {
    pi: Permutation,
    d: Vec<Permutation>,
}

impl fmt::Debug for BlockPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; ", self.pi)?;
        for (k, di) in self.d.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{di}")?;
        }
        write!(f, ")")
    }
}

impl BlockPermutation {
    pub fn new(pi: Permutation, d: Vec<Permutation>) -> Self {
        assert_eq!(pi.n(), d.len(), "need one block map per block");
        let kappa = d[0].n();
        assert!(d.iter().all(|p| p.n() == kappa), "block maps must share κ");
        BlockPermutation { pi, d }
    }

    pub fn identity(n: usize, kappa: usize) -> Self {
        Self::new(
            Permutation::identity(n),
            vec![Permutation::identity(kappa); n],
        )
    }

    pub fn n(&self) -> usize {
        self.pi.n()
    }

    pub fn kappa(&self) -> usize {
        self.d[0].n()
    }

    pub fn pi(&self) -> &Permutation {
        &self.pi
    }

    pub fn d(&self) -> &[Permutation] {
        &self.d
    }

    /// The underlying element of S_{nκ}: `(j, α) ↦ (π(j), d_{π(j)}(α))`.
    pub fn to_full(&self) -> Permutation {
        let n = self.n();
        let kappa = self.kappa();
        let mut images = vec![0; n * kappa];
        for j in 1..=n {
            let target = self.pi.apply(j);
            let d = &self.d[target - 1];
            for alpha in 1..=kappa {
                images[(j - 1) * kappa + alpha - 1] = (target - 1) * kappa + d.apply(alpha);
            }
        }
        Permutation { images }
    }

    /// Decomposes θ ∈ S_{nκ} into (π; d_1,…,d_n); `None` when some block is
    /// not carried onto a single block.
    pub fn from_full(theta: &Permutation, n: usize, kappa: usize) -> Option<Self> {
        assert_eq!(theta.n(), n * kappa, "size must be n·κ");
        let block_of = |flat: usize| (flat - 1) / kappa + 1;
        let member_of = |flat: usize| (flat - 1) % kappa + 1;
        let mut pi_images = vec![0; n];
        for j in 1..=n {
            let target = block_of(theta.apply((j - 1) * kappa + 1));
            for alpha in 2..=kappa {
                if block_of(theta.apply((j - 1) * kappa + alpha)) != target {
                    return None;
                }
            }
            pi_images[j - 1] = target;
        }
        let pi = Permutation::from_images(pi_images).ok()?;
        let pi_inv = pi.inverse();
        let mut d = Vec::with_capacity(n);
        for i in 1..=n {
            let source = pi_inv.apply(i);
            let images: Vec<usize> = (1..=kappa)
                .map(|alpha| member_of(theta.apply((source - 1) * kappa + alpha)))
                .collect();
            d.push(Permutation::from_images(images).ok()?);
        }
        Some(Self::new(pi, d))
    }

    /// Group product in tuple form: `π_{β∘α} = π_β ∘ π_α` and
    /// `d^{β∘α}_i = d^β_i ∘ d^α_{π_β^{-1}(i)}`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "block counts must match");
        assert_eq!(self.kappa(), other.kappa(), "block sizes must match");
        let pi = self.pi.compose(&other.pi);
        let pi_beta_inv = self.pi.inverse();
        let d = (1..=self.n())
            .map(|i| self.d[i - 1].compose(&other.d[pi_beta_inv.apply(i) - 1]))
            .collect();
        Self::new(pi, d)
    }

    pub fn inverse(&self) -> Self {
        let pi_inv = self.pi.inverse();
        let d = (1..=self.n())
            .map(|i| self.d[self.pi.apply(i) - 1].inverse())
            .collect();
        Self::new(pi_inv, d)
    }

    pub fn is_identity(&self) -> bool {
        self.pi.is_identity() && self.d.iter().all(|p| p.is_identity())
    }

    /// Full structure matrix `P_θ = D^θ (P_π ⊗ I_κ)` with
    /// `D^θ = blockdiag(D^θ_1,…,D^θ_n)`.
    pub fn structure_matrix(&self) -> LogicalMatrix {
        self.to_full().structure_matrix()
    }
}

pub const DEFAULT_THETA_BOUND: u128 = 1_000_000;

/// Number of elements of Θ_{[n;κ]}, i.e. n!(κ!)^n.
pub fn theta_order(n: usize, kappa: usize) -> u128 {
    let fact = |m: usize| (1..=m as u128).product::<u128>();
    fact(n) * fact(kappa).pow(n as u32)
}

/// All of Θ_{[n;κ]}: π in lexicographic order, then the d-tuple in
/// lexicographic order per block.
pub fn enumerate_theta(n: usize, kappa: usize) -> Result<Vec<BlockPermutation>, BoundExceeded> {
    enumerate_theta_bounded(n, kappa, DEFAULT_THETA_BOUND)
}

pub fn enumerate_theta_bounded(
    n: usize,
    kappa: usize,
    bound: u128,
) -> Result<Vec<BlockPermutation>, BoundExceeded> {
    let required = theta_order(n, kappa);
    if required > bound {
        return Err(BoundExceeded { required, bound });
    }
    let s_n = enumerate_sn_bounded(n, n).expect("within explicit bound");
    let s_kappa = enumerate_sn_bounded(kappa, kappa).expect("within explicit bound");
    let mut out = Vec::with_capacity(required as usize);
    for pi in &s_n {
        let mut picks = vec![0usize; n];
        loop {
            let d: Vec<Permutation> = picks.iter().map(|&k| s_kappa[k].clone()).collect();
            out.push(BlockPermutation::new(pi.clone(), d));
            // odometer over the n block maps
            let mut pos = n;
            loop {
                if pos == 0 {
                    break;
                }
                picks[pos - 1] += 1;
                if picks[pos - 1] < s_kappa.len() {
                    break;
                }
                picks[pos - 1] = 0;
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stp::RationalMatrix;

    #[test]
    fn cycle_construction_matches_tables() {
        // σ = (1,3)(2,5) and μ = (1,2,4,3,5) in S_5
        let sigma = Permutation::from_cycles(5, &[vec![1, 3], vec![2, 5]]).unwrap();
        assert_eq!(sigma.images(), &[3, 5, 1, 4, 2]);
        let mu = Permutation::from_cycles(5, &[vec![1, 2, 4, 3, 5]]).unwrap();
        assert_eq!(mu.images(), &[2, 4, 5, 3, 1]);
        assert_eq!(Permutation::from_cycles(5, &[]).unwrap(), Permutation::identity(5));

        // μ∘σ = (1,5,4,3,2): σ first, then μ
        let prod = mu.compose(&sigma);
        assert_eq!(prod, Permutation::from_cycles(5, &[vec![1, 5, 4, 3, 2]]).unwrap());
        assert_eq!(sigma.compose(&sigma.inverse()), Permutation::identity(5));
    }

    #[test]
    fn cycle_construction_rejects_bad_input() {
        assert!(matches!(
            Permutation::from_cycles(3, &[vec![1, 4]]),
            Err(PermError::OutOfRange { .. })
        ));
        assert!(matches!(
            Permutation::from_cycles(3, &[vec![1, 2], vec![2, 3]]),
            Err(PermError::Repeated { .. })
        ));
    }

    #[test]
    fn cycle_text_round_trip() {
        let sigma = Permutation::parse(5, "(1,3)(2,5)").unwrap();
        assert_eq!(sigma.images(), &[3, 5, 1, 4, 2]);
        assert_eq!(sigma.to_string(), "(1,3)(2,5)");
        assert_eq!(Permutation::parse(4, " () ").unwrap(), Permutation::identity(4));
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert_eq!(
            Permutation::parse(5, "( 1 , 3 ) ( 2 , 5 )").unwrap(),
            sigma
        );
        assert!(Permutation::parse(3, "(1,2").is_err());
        assert!(Permutation::parse(3, "1,2").is_err());
    }

    #[test]
    fn structure_matrix_is_a_homomorphism() {
        let sigma = Permutation::from_cycles(5, &[vec![1, 3], vec![2, 5]]).unwrap();
        let mu = Permutation::from_cycles(5, &[vec![1, 2, 4, 3, 5]]).unwrap();
        assert_eq!(
            mu.compose(&sigma).structure_matrix(),
            mu.structure_matrix().mul(&sigma.structure_matrix())
        );
        for n in 2..=4usize {
            let sn = enumerate_sn(n).unwrap();
            for a in &sn {
                for b in &sn {
                    assert_eq!(
                        a.compose(b).structure_matrix(),
                        a.structure_matrix().mul(&b.structure_matrix())
                    );
                }
            }
        }
        // P_σ δ_n^i = δ_n^{σ(i)}
        for i in 1..=5 {
            assert_eq!(sigma.structure_matrix().apply(i), sigma.apply(i));
        }
    }

    #[test]
    fn structure_matrix_example_247() {
        // σ_4 = (1,2,3) in S_3
        let sigma4 = Permutation::from_cycles(3, &[vec![1, 2, 3]]).unwrap();
        let expected = RationalMatrix::from_rows(vec![
            vec![crate::rational::rat(0), crate::rational::rat(0), crate::rational::rat(1)],
            vec![crate::rational::rat(1), crate::rational::rat(0), crate::rational::rat(0)],
            vec![crate::rational::rat(0), crate::rational::rat(1), crate::rational::rat(0)],
        ]);
        assert_eq!(sigma4.structure_matrix().to_dense(), expected);
    }

    #[test]
    fn generator_sets() {
        let gens = transposition_generators(3);
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[0], Permutation::parse(3, "(1,2)").unwrap());
        assert_eq!(gens[1], Permutation::parse(3, "(1,3)").unwrap());
        assert_eq!(transposition_generators(2).len(), 1);
        assert_eq!(transposition_generators(4).len(), 3);
    }

    #[test]
    fn transpositions_generate_sn() {
        for n in 2..=5 {
            let gens = transposition_generators(n);
            let mut closure: std::collections::HashSet<Permutation> =
                [Permutation::identity(n)].into_iter().collect();
            loop {
                let mut grew = false;
                let snapshot: Vec<_> = closure.iter().cloned().collect();
                for g in &gens {
                    for e in &snapshot {
                        if closure.insert(g.compose(e)) {
                            grew = true;
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
            let order: usize = (1..=n).product();
            assert_eq!(closure.len(), order, "n={n}");
        }
    }

    #[test]
    fn enumeration_sizes_and_order() {
        assert_eq!(enumerate_sn(1).unwrap().len(), 1);
        assert_eq!(enumerate_sn(3).unwrap().len(), 6);
        assert_eq!(enumerate_sn(4).unwrap().len(), 24);
        assert!(enumerate_sn(7).is_err());
        let s3 = enumerate_sn(3).unwrap();
        assert_eq!(s3[0], Permutation::identity(3));
        let mut sorted = s3.clone();
        sorted.sort_by(|a, b| a.images().cmp(b.images()));
        assert_eq!(s3, sorted);
    }

    #[test]
    fn block_decompose_example_44_alpha() {
        let alpha = Permutation::parse(9, "(1,6,3,4,2,5)").unwrap();
        let block = BlockPermutation::from_full(&alpha, 3, 3).unwrap();
        assert_eq!(block.pi(), &Permutation::parse(3, "(1,2)").unwrap());
        assert_eq!(block.d()[0], Permutation::parse(3, "(1,2)").unwrap());
        assert_eq!(block.d()[1], Permutation::parse(3, "(1,3)").unwrap());
        assert_eq!(block.d()[2], Permutation::identity(3));
        assert_eq!(block.to_full(), alpha);
    }

    #[test]
    fn block_decompose_rejects_straddling() {
        let theta = Permutation::parse(4, "(1,2,4)").unwrap();
        assert!(BlockPermutation::from_full(&theta, 2, 2).is_none());
        let id = Permutation::identity(6);
        let block = BlockPermutation::from_full(&id, 2, 3).unwrap();
        assert!(block.is_identity());
    }

    #[test]
    fn block_compose_example_44() {
        let alpha = BlockPermutation::from_full(&Permutation::parse(9, "(1,6,3,4,2,5)").unwrap(), 3, 3)
            .unwrap();
        let beta = BlockPermutation::from_full(
            &Permutation::parse(9, "(1,2,3)(4,9,6,8)(5,7)").unwrap(),
            3,
            3,
        )
        .unwrap();
        assert_eq!(beta.pi(), &Permutation::parse(3, "(2,3)").unwrap());
        assert_eq!(beta.d()[0], Permutation::parse(3, "(1,2,3)").unwrap());
        assert_eq!(beta.d()[1], Permutation::parse(3, "(1,2)").unwrap());
        assert_eq!(beta.d()[2], Permutation::parse(3, "(1,3,2)").unwrap());

        let gamma = beta.compose(&alpha);
        assert_eq!(gamma.to_full(), Permutation::parse(9, "(1,8,4,3,9,6)(2,7,5)").unwrap());
        assert_eq!(gamma.pi(), &Permutation::parse(3, "(1,3,2)").unwrap());
        assert_eq!(gamma.d()[0], Permutation::parse(3, "(1,3)").unwrap());
        assert_eq!(gamma.d()[1], Permutation::parse(3, "(1,2)").unwrap());
        assert_eq!(gamma.d()[2], Permutation::parse(3, "(1,2)").unwrap());

        let id = BlockPermutation::identity(3, 3);
        assert_eq!(gamma.compose(&id), gamma);
        assert_eq!(id.compose(&gamma), gamma);
    }

    #[test]
    fn block_compose_agrees_with_full_composition() {
        let theta22 = enumerate_theta(2, 2).unwrap();
        for a in &theta22 {
            for b in &theta22 {
                let via_blocks = b.compose(a).to_full();
                let via_full = b.to_full().compose(&a.to_full());
                assert_eq!(via_blocks, via_full);
            }
            assert!(a.compose(&a.inverse()).is_identity());
        }
    }

    #[test]
    fn theta_enumeration_counts() {
        assert_eq!(enumerate_theta(2, 2).unwrap().len(), 8);
        assert_eq!(enumerate_theta(1, 2).unwrap().len(), 2);
        assert_eq!(enumerate_theta(3, 3).unwrap().len(), 1296);
        assert_eq!(theta_order(3, 3), 1296);
        assert!(enumerate_theta_bounded(3, 3, 100).is_err());
    }

    #[test]
    fn decompose_round_trips_over_theta() {
        for (n, kappa) in [(2usize, 2usize), (2, 3), (3, 2), (3, 3)] {
            for theta in enumerate_theta(n, kappa).unwrap() {
                let full = theta.to_full();
                let back = BlockPermutation::from_full(&full, n, kappa).unwrap();
                assert_eq!(back, theta);
            }
        }
    }

    #[test]
    fn structure_matrix_factorization() {
        // P_θ = blockdiag(D_1,…,D_n) · (P_π ⊗ I_κ) over all of Θ_{[3;3]}
        use crate::stp::LogicalMatrix;
        for theta in enumerate_theta(3, 3).unwrap() {
            let n = theta.n();
            let kappa = theta.kappa();
            let mut dtheta = theta.d()[0].structure_matrix().to_dense();
            for i in 1..n {
                let di = theta.d()[i].structure_matrix().to_dense();
                // grow the block diagonal
                let top = dtheta.hstack(&RationalMatrix::zeros(dtheta.rows(), kappa));
                let bottom =
                    RationalMatrix::zeros(kappa, dtheta.cols()).hstack(&di);
                dtheta = top.vstack(&bottom);
            }
            let expected = dtheta.mul(
                &theta
                    .pi()
                    .structure_matrix()
                    .kron(&LogicalMatrix::identity(kappa))
                    .to_dense(),
            );
            assert_eq!(theta.structure_matrix().to_dense(), expected);
        }
    }
}
