//! Enumerate the strategy symmetry group Θ(G) of Matching Pennies: block
//! permutations (π; d_1, d_2) of the grouped strategy set that leave the
//! payoffs invariant, and the player permutations they shadow.
//!
//! Run with `cargo run --example strategy_symmetries`.

use gamesym::game::Game;
use gamesym::group::theta_order;
use gamesym::rational::rat;
use gamesym::symmetry::strategy_symmetry_group;

fn main() {
    let game = Game::new(
        2,
        2,
        vec![
            vec![rat(1), rat(-1), rat(-1), rat(1)],
            vec![rat(-1), rat(1), rat(1), rat(-1)],
        ],
    )
    .unwrap();

    let group = strategy_symmetry_group(&game).expect("within enumeration bound");
    println!(
        "Matching Pennies: {} of the {} block permutations are symmetries",
        group.len(),
        theta_order(2, 2)
    );
    for theta in &group {
        let d: Vec<String> = theta.d().iter().map(|p| p.to_string()).collect();
        println!("  pi = {:<6} d = ({})", theta.pi().to_string(), d.join(", "));
    }

    let mut shadows: Vec<String> = group.iter().map(|t| t.pi().to_string()).collect();
    shadows.sort();
    shadows.dedup();
    println!("player shadows Pi(G) = {{{}}}", shadows.join(", "));
    println!(
        "every player permutation realized (name-irrelevant): {}",
        shadows.len() == 2
    );

    // closure under composition makes Θ(G) a group
    for a in &group {
        for b in &group {
            assert!(group.contains(&a.compose(b)));
        }
    }
    println!("Θ(G) verified closed under composition ✓");
}
