//! Closed-form potentials for Boolean games (κ = 2): the H_n coordinate
//! system of symmetric games, the K_n certificate, the weighted variant, and
//! negation-symmetric games. Every closed form is cross-checked against the
//! generic equation solver (agreement up to the all-ones gauge).
//!
//! Run with `cargo run --example boolean_closed_forms`.

use gamesym::boolean::{
    build_hn, check_negation_symmetric, check_symmetric_boolean, negation_potential, psi_matrix,
    symmetric_boolean_potential, weighted_boolean_potential,
};
use gamesym::game::Game;
use gamesym::potential::{solve_potential, verify_potential, PotentialProblem};
use gamesym::rational::{rat, Rational};
use gamesym::stp::{row_times_logical, swap_matrix, LogicalMatrix, RationalMatrix};
use gamesym::symmetry::Weights;

fn fmt(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// Builds the symmetric Boolean game with coordinate vector v ∈ Q^{2n}.
fn symmetric_game_from_coords(n: usize, v: &[Rational]) -> Game {
    let v1_col = build_hn(n).mul(&RationalMatrix::col_vector(v.to_vec()));
    let v1: Vec<Rational> = (0..v1_col.rows()).map(|r| v1_col.get(r, 0).clone()).collect();
    let mut payoffs = vec![v1.clone()];
    for i in 2..=n {
        let w = swap_matrix(1 << (i - 1), 2).kron(&LogicalMatrix::identity(1 << (n - i)));
        payoffs.push(row_times_logical(&v1, &w));
    }
    Game::new(n, 2, payoffs).unwrap()
}

fn main() {
    // Symmetric Boolean games have a 2n-dimensional coordinate space; the
    // membership test recovers the coordinates exactly.
    let n = 4;
    let v: Vec<Rational> = (1..=2 * n as i64).map(rat).collect();
    let game = symmetric_game_from_coords(n, &v);
    let recovered = check_symmetric_boolean(&game).expect("symmetric by construction");
    println!("coordinates recovered: {}", fmt(&recovered));

    // The potential comes from a single matrix: V^P = v^T Ψ.
    let psi = psi_matrix(n);
    println!("Ψ for n = {n} is {}x{}", psi.rows(), psi.cols());
    let closed = symmetric_boolean_potential(&v, n);
    println!("closed-form potential: {}", fmt(&closed));

    let problem =
        PotentialProblem::unit_weights(vec![2; n], game.payoff_vectors().to_vec()).unwrap();
    println!("verifies exhaustively: {}", verify_potential(&problem, &closed));
    let generic = solve_potential(&problem).expect("symmetric Boolean games are potential");
    let shift = &closed[0] - &generic.potential[0];
    let gauge_ok = closed
        .iter()
        .zip(&generic.potential)
        .all(|(a, b)| a - b == shift);
    println!("matches the generic solver up to the all-ones gauge: {gauge_ok}");

    // Weighted symmetric games route through the scaled game G^μ.
    let weighted = Game::new(
        2,
        2,
        vec![
            vec![rat(2), rat(4), rat(6), rat(4)],
            vec![rat(3), rat(9), rat(6), rat(6)],
        ],
    )
    .unwrap();
    let mu = Weights::new(vec![rat(3), rat(2)]).unwrap();
    let cert = weighted_boolean_potential(&weighted, &mu).expect("weighted symmetric");
    println!(
        "\nweighted game: potential {} with weights {}",
        fmt(&cert.potential),
        fmt(&cert.weights)
    );

    // Negation-symmetric games: flipping the strategies of players 1 and i
    // jointly carries c_1 onto c_i. They are potential with a one-line
    // closed form.
    let negation = Game::new(
        2,
        2,
        vec![
            vec![rat(1), rat(3), rat(4), rat(2)],
            vec![rat(2), rat(4), rat(3), rat(1)],
        ],
    )
    .unwrap();
    println!(
        "\nnegation-symmetric: {}",
        check_negation_symmetric(&negation)
    );
    let vp = negation_potential(&negation).expect("negation symmetric");
    println!("negation potential: {}", fmt(&vp));
    let problem =
        PotentialProblem::unit_weights(vec![2, 2], negation.payoff_vectors().to_vec()).unwrap();
    println!("verifies exhaustively: {}", verify_potential(&problem, &vp));
}
