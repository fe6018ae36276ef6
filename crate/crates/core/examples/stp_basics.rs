//! Tour of the exact matrix kernel: semi-tensor products, swap matrices and
//! the Khatri-Rao product.
//!
//! Run with `cargo run --example stp_basics`.

use gamesym::rational::rat;
use gamesym::stp::{swap_matrix, LogicalMatrix, RationalMatrix};

fn show(label: &str, m: &RationalMatrix) {
    println!("{label} ({}x{}):", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(|v| v.to_string()).collect();
        println!("  [{}]", row.join(" "));
    }
}

fn main() {
    // The semi-tensor product extends the matrix product to mismatched
    // dimensions: A ⋉ B = (A ⊗ I_{t/n})(B ⊗ I_{t/p}) with t = lcm(n, p).
    let a = RationalMatrix::new(1, 2, vec![rat(1), rat(2)]);
    let b = RationalMatrix::col_vector(vec![rat(1), rat(0), rat(0), rat(1)]);
    show("a (1x2 row)", &a);
    show("b (4x1 column)", &b);
    show("a ⋉ b", &a.stp(&b));

    // When inner dimensions match it is the ordinary product.
    let c = RationalMatrix::new(2, 2, vec![rat(1), rat(2), rat(3), rat(4)]);
    let d = RationalMatrix::identity(2);
    assert_eq!(c.stp(&d), c.mul(&d));
    println!("\nmatching dimensions degenerate to the ordinary product ✓");

    // Swap matrices exchange STP factors: W_{[m,n]} x ⋉ y = y ⋉ x.
    let w = swap_matrix(2, 3);
    show("\nW_[2,3] densified", &w.to_dense());
    let x = RationalMatrix::col_vector(vec![rat(5), rat(-1)]);
    let y = RationalMatrix::col_vector(vec![rat(2), rat(0), rat(7)]);
    let swapped = w.to_dense().stp(&x.stp(&y));
    assert_eq!(swapped, y.stp(&x));
    println!("W_[2,3] ⋉ x ⋉ y = y ⋉ x ✓");

    // Logical matrices stay in column-index form; products are index
    // arithmetic, never dense expansion.
    let m_n = gamesym::stp::negation_matrix();
    println!("\nnegation matrix as indices: {:?}", m_n);
    let composed = m_n.mul(&m_n);
    assert_eq!(composed, LogicalMatrix::identity(2));
    println!("M_n · M_n = I ✓");

    // Khatri-Rao: column-wise STP. For logical factors it implements
    // \"pairing\" of logical functions: y = Mx, z = Nx gives yz = (M*N)x.
    let phi1 = LogicalMatrix::new(2, vec![1, 1, 2, 2]).to_dense();
    let phi2 = LogicalMatrix::new(2, vec![1, 2, 1, 2]).to_dense();
    show("\nΦ_1 * Φ_2 (2-player, 2-strategy profile pairing)", &phi1.khatri_rao(&phi2));
}
