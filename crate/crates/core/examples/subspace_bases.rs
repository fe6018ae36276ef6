//! Compute canonical bases of symmetric-game subspaces: the set of structure
//! vectors invariant under the player-permutation representation, as the
//! exact nullspace of the stacked generator constraints.
//!
//! Run with `cargo run --example subspace_bases`.

use gamesym::boolean::build_hn;
use gamesym::linalg::same_row_span;
use gamesym::rational::Rational;
use gamesym::stp::{row_times_logical, swap_matrix, LogicalMatrix};
use gamesym::symmetry::{symmetric_subspace_basis, SymmetryKind};

fn main() {
    for (n, kappa) in [(2usize, 2usize), (3, 2), (4, 2), (2, 3), (3, 3)] {
        let basis =
            symmetric_subspace_basis(n, kappa, &SymmetryKind::Ordinary).expect("within bound");
        println!(
            "ordinary symmetric subspace of {n} players x {kappa} strategies: dimension {}",
            basis.len()
        );
    }

    // for Boolean games the dimension is 2n, with an explicit basis carried
    // by the columns of H_n; check the two constructions span the same space
    let n = 4;
    let basis = symmetric_subspace_basis(n, 2, &SymmetryKind::Ordinary).expect("within bound");
    let hn = build_hn(n);
    let hn_basis: Vec<Vec<Rational>> = (0..2 * n)
        .map(|col| {
            let h: Vec<Rational> = (0..hn.rows()).map(|r| hn.get(r, col).clone()).collect();
            let mut row = Vec::with_capacity(n << n);
            for j in 1..=n {
                let w = swap_matrix(1 << (j - 1), 2).kron(&LogicalMatrix::identity(1 << (n - j)));
                row.extend(row_times_logical(&h, &w));
            }
            row
        })
        .collect();
    println!(
        "\nBoolean n = {n}: nullspace basis and H_n-generated basis span the same space: {}",
        same_row_span(&basis, &hn_basis)
    );

    println!("\nfirst three canonical basis rows for n = 2, kappa = 2:");
    let small = symmetric_subspace_basis(2, 2, &SymmetryKind::Ordinary).expect("within bound");
    for row in small.iter().take(3) {
        let text: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        println!("  [{}]", text.join(" "));
    }
}
