//! Solve the potential equation E^w(n) ξ = b^w(n) exactly: plain potential
//! games, weighted potentials, a renaming potential, and a game with
//! per-player strategy counts.
//!
//! Run with `cargo run --example potential_synthesis`.

use gamesym::game::Game;
use gamesym::group::Permutation;
use gamesym::potential::{
    solve_potential, solve_renaming_potential, verify_potential, PotentialProblem,
};
use gamesym::rational::{rat, ratio};
use gamesym::symmetry::Renaming;

fn fmt(values: &[gamesym::rational::Rational]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

fn main() {
    // Matching Pennies has no potential function.
    let pennies = PotentialProblem::unit_weights(
        vec![2, 2],
        vec![
            vec![rat(1), rat(-1), rat(-1), rat(1)],
            vec![rat(-1), rat(1), rat(1), rat(-1)],
        ],
    )
    .unwrap();
    println!(
        "Matching Pennies is a potential game: {}",
        solve_potential(&pennies).is_some()
    );

    // A weighted potential game with weights (1/3, 1/2).
    let weighted = PotentialProblem::new(
        vec![2, 2],
        vec![ratio(1, 3), ratio(1, 2)],
        vec![
            vec![rat(2), rat(4), rat(6), rat(4)],
            vec![rat(3), rat(9), rat(6), rat(6)],
        ],
    )
    .unwrap();
    let cert = solve_potential(&weighted).expect("weighted potential game");
    println!("\nweighted game potential: {}", fmt(&cert.potential));
    println!(
        "passes exhaustive verification: {}",
        verify_potential(&weighted, &cert.potential)
    );

    // Battle of the Sexes becomes potential after renaming player 2's
    // strategies; the potential pulls back to the original game.
    let bos = Game::new(
        2,
        2,
        vec![
            vec![rat(2), rat(0), rat(0), rat(1)],
            vec![rat(1), rat(0), rat(0), rat(2)],
        ],
    )
    .unwrap();
    let renaming = Renaming::new(vec![
        Permutation::identity(2),
        Permutation::parse(2, "(1,2)").unwrap(),
    ]);
    let result = solve_renaming_potential(&bos, &renaming).expect("renaming potential");
    println!("\nBattle of the Sexes with r = ((), (1,2)):");
    println!("  renamed-game potential: {}", fmt(&result.renamed_potential));
    println!("  pulled-back potential:  {}", fmt(&result.certificate.potential));
    let unit = PotentialProblem::from_game(&bos, vec![rat(1), rat(1)]).unwrap();
    println!(
        "  verifies on the original game: {}",
        verify_potential(&unit, &result.certificate.potential)
    );

    // Per-player strategy counts are supported directly.
    let potential: Vec<_> = (0..6).map(rat).collect();
    let c1: Vec<_> = (0..6).map(|x| &potential[x] + rat([5, -2, 7][x % 3])).collect();
    let c2: Vec<_> = (0..6).map(|x| &potential[x] + rat([1, 4][x / 3])).collect();
    let mixed = PotentialProblem::unit_weights(vec![2, 3], vec![c1, c2]).unwrap();
    let cert = solve_potential(&mixed).expect("built from a potential");
    println!("\n2x3 game potential: {}", fmt(&cert.potential));
    println!(
        "matches the construction up to the constant gauge: {}",
        verify_potential(&mixed, &potential)
    );
}
