//! Classify three classic 2x2 games: Matching Pennies, Battle of the Sexes
//! and a weighted-symmetric game.
//!
//! Run with `cargo run --example classify_games`.

use gamesym::game::Game;
use gamesym::rational::rat;
use gamesym::symmetry::{
    check_name_irrelevant, check_ordinary, infer_weights, search_renaming, WeightInference,
};

fn classify(name: &str, game: &Game) {
    println!("== {name} ==");
    println!("  ordinary symmetric: {}", check_ordinary(game));
    match infer_weights(game) {
        WeightInference::Found(w) => {
            let cleared: Vec<String> = w.cleared().iter().map(|v| v.to_string()).collect();
            println!("  weighted symmetric with mu = ({})", cleared.join(", "));
        }
        WeightInference::NotWeighted => println!("  not weighted symmetric"),
        WeightInference::Degenerate => println!("  weights undetermined (zero payoffs)"),
    }
    match search_renaming(game).expect("tiny search space") {
        Some(r) => {
            let perms: Vec<String> = r.perms().iter().map(|p| p.to_string()).collect();
            println!("  renaming symmetric via r = ({})", perms.join(", "));
        }
        None => println!("  not renaming symmetric"),
    }
    println!(
        "  name-irrelevant symmetric: {}",
        check_name_irrelevant(game).expect("tiny enumeration")
    );
    println!();
}

fn main() {
    let matching_pennies = Game::new(
        2,
        2,
        vec![
            vec![rat(1), rat(-1), rat(-1), rat(1)],
            vec![rat(-1), rat(1), rat(1), rat(-1)],
        ],
    )
    .unwrap();
    classify("Matching Pennies", &matching_pennies);

    let battle_of_sexes = Game::new(
        2,
        2,
        vec![
            vec![rat(2), rat(0), rat(0), rat(1)],
            vec![rat(1), rat(0), rat(0), rat(2)],
        ],
    )
    .unwrap();
    classify("Battle of the Sexes", &battle_of_sexes);

    let weighted = Game::new(
        2,
        2,
        vec![
            vec![rat(2), rat(4), rat(6), rat(4)],
            vec![rat(3), rat(9), rat(6), rat(6)],
        ],
    )
    .unwrap();
    classify("weighted 2x2 game", &weighted);
}
