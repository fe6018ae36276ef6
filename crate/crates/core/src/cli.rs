//! Command-line surface: the game file format, classification and potential
//! reports, and the drivers behind the `gamesym` binary's subcommands.
//!
//! Game files are line-oriented UTF-8 text:
//!
//! ```text
//! # Matching Pennies
//! players: 2
//! strategies: 2
//! payoffs:
//! 1 -1 -1 1
//! -1 1 1 -1
//! ```
//!
//! Payoff entries are integers, fractions `p/q` or decimal strings, parsed
//! exactly. Each payoff row lists the κ^n (or Πk_i) entries of one player's
//! structure vector in profile order with player 1 most significant: for a
//! 2×2 game the columns are the profiles (1,1), (1,2), (2,1), (2,2).
//! `strategies` takes either one common count or one count per player; the
//! per-player form is accepted only by the `potential` command.
//!
//! Reports are emitted either as human-readable text or as a single JSON
//! object (`--format json`) with every rational serialized as a `p` or `p/q`
//! string so nothing is rounded. Exit codes: 0 = completed, 2 = input error,
//! 3 = a resource bound was exceeded.

use crate::boolean::check_negation_symmetric;
use crate::game::Game;
use crate::group::{theta_order, Permutation, DEFAULT_THETA_BOUND};
use crate::potential::{
    solve_potential, solve_renaming_potential, verify_potential, PotentialProblem,
};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::symmetry::{
    check_ordinary, check_name_irrelevant_bounded, infer_weights, search_renaming_bounded,
    strategy_symmetry_group_bounded, symmetric_subspace_basis_bounded, Renaming, SymmetryKind,
    WeightInference, Weights, DEFAULT_BASIS_BOUND,
};
use crate::BoundExceeded;
use serde::Serialize;
use std::fmt;

#[derive(Debug)]
pub enum CliError {
    /// Malformed input (file, flag value, or shape mismatch); exit code 2.
    Input(String),
    /// A resource bound was exceeded; exit code 3.
    Bound(BoundExceeded),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "{msg}"),
            CliError::Bound(b) => write!(f, "{b}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<BoundExceeded> for CliError {
    fn from(value: BoundExceeded) -> Self {
        CliError::Bound(value)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Bound(_) => 3,
        }
    }
}

fn input_err(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

/// Parsed game file: player count, strategy counts (one entry = common κ)
/// and one payoff vector per player.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameFile {
    pub players: usize,
    pub strategies: Vec<usize>,
    pub payoffs: Vec<Vec<Rational>>,
}

impl GameFile {
    pub fn profile_count(&self) -> usize {
        self.expanded_counts().iter().product()
    }

    /// Per-player strategy counts, expanding a common κ.
    pub fn expanded_counts(&self) -> Vec<usize> {
        if self.strategies.len() == 1 {
            vec![self.strategies[0]; self.players]
        } else {
            self.strategies.clone()
        }
    }

    pub fn common_kappa(&self) -> Option<usize> {
        let counts = self.expanded_counts();
        let first = counts[0];
        counts.iter().all(|&k| k == first).then_some(first)
    }

    /// Builds the common-κ `Game`; errors when counts are per-player.
    pub fn to_game(&self) -> Result<Game, CliError> {
        let kappa = self.common_kappa().ok_or_else(|| {
            input_err("this command needs a common strategy count for every player")
        })?;
        Game::new(self.players, kappa, self.payoffs.clone())
            .map_err(|e| input_err(format!("invalid game: {e}")))
    }
}

/// Parses the line-oriented game file format. `#` starts a comment.
pub fn parse_game_file(text: &str) -> Result<GameFile, CliError> {
    let mut players: Option<usize> = None;
    let mut strategies: Option<Vec<usize>> = None;
    let mut payoff_lines: Vec<&str> = Vec::new();
    let mut in_payoffs = false;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fail = |msg: String| input_err(format!("line {}: {msg}", lineno + 1));
        if in_payoffs {
            payoff_lines.push(line);
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| fail("expected `key: value`".into()))?;
        match key.trim() {
            "players" => {
                let n: usize = value
                    .trim()
                    .parse()
                    .map_err(|_| fail(format!("invalid player count `{}`", value.trim())))?;
                players = Some(n);
            }
            "strategies" => {
                let counts = value
                    .split_whitespace()
                    .map(|tok| {
                        tok.parse::<usize>()
                            .map_err(|_| fail(format!("invalid strategy count `{tok}`")))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if counts.is_empty() {
                    return Err(fail("empty strategy list".into()));
                }
                strategies = Some(counts);
            }
            "payoffs" => {
                if !value.trim().is_empty() {
                    return Err(fail("payoff rows start on the following lines".into()));
                }
                in_payoffs = true;
            }
            other => return Err(fail(format!("unknown field `{other}`"))),
        }
    }
    let players = players.ok_or_else(|| input_err("missing `players` field"))?;
    let strategies = strategies.ok_or_else(|| input_err("missing `strategies` field"))?;
    if players == 0 {
        return Err(input_err("player count must be positive"));
    }
    if strategies.len() != 1 && strategies.len() != players {
        return Err(input_err(format!(
            "`strategies` must list one common count or exactly {players} counts"
        )));
    }
    if strategies.iter().any(|&k| k < 2) {
        return Err(input_err("every strategy count must be at least 2"));
    }
    if payoff_lines.len() != players {
        return Err(input_err(format!(
            "expected {players} payoff rows, found {}",
            payoff_lines.len()
        )));
    }
    let file = GameFile {
        players,
        strategies,
        payoffs: Vec::new(),
    };
    let expected = file.profile_count();
    let mut payoffs = Vec::with_capacity(players);
    for (row_idx, line) in payoff_lines.iter().enumerate() {
        let row = line
            .split_whitespace()
            .map(|tok| {
                parse_rational(tok)
                    .map_err(|e| input_err(format!("payoff row {}: {e}", row_idx + 1)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != expected {
            return Err(input_err(format!(
                "payoff row {} has {} entries, expected {expected}",
                row_idx + 1,
                row.len()
            )));
        }
        payoffs.push(row);
    }
    Ok(GameFile { payoffs, ..file })
}

pub fn load_game_file(path: &str) -> Result<GameFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| input_err(format!("cannot read `{path}`: {e}")))?;
    parse_game_file(&text)
}

/// Output format of the reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    Text,
    #[default]
    Json,
}

fn rationals_to_strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(format_rational).collect()
}

/// A field that may be skipped when its computation would exceed the bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum MaybeSkipped<T> {
    Value(T),
    Skipped(String),
}

impl<T> MaybeSkipped<T> {
    fn skipped() -> Self {
        MaybeSkipped::Skipped("skipped".to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassifyReport {
    pub ordinary: bool,
    /// Integer-cleared weights, or null when the game is not weighted
    /// symmetric (the zero game reports null with `weights_degenerate`).
    pub weights: Option<Vec<String>>,
    /// The same weights normalized to μ_1 = 1.
    pub weights_mu1: Option<Vec<String>>,
    pub weights_degenerate: bool,
    pub renaming: MaybeSkipped<Option<Vec<String>>>,
    pub name_irrelevant: MaybeSkipped<bool>,
    /// Only populated for Boolean games (κ = 2).
    pub negation_symmetric: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    pub bound: u128,
    pub strict: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            bound: DEFAULT_THETA_BOUND,
            strict: false,
        }
    }
}

pub fn classify(file: &GameFile, opts: &ClassifyOptions) -> Result<ClassifyReport, CliError> {
    let game = file.to_game()?;
    let ordinary = check_ordinary(&game);
    let (weights, weights_mu1, weights_degenerate) = match infer_weights(&game) {
        WeightInference::Found(w) => (
            Some(rationals_to_strings(&w.cleared())),
            Some(rationals_to_strings(w.as_slice())),
            false,
        ),
        WeightInference::NotWeighted => (None, None, false),
        WeightInference::Degenerate => (None, None, true),
    };
    let renaming = match search_renaming_bounded(&game, opts.bound) {
        Ok(Some(r)) => {
            MaybeSkipped::Value(Some(r.perms().iter().map(|p| p.to_string()).collect()))
        }
        Ok(None) => MaybeSkipped::Value(None),
        Err(bound) if opts.strict => return Err(bound.into()),
        Err(_) => MaybeSkipped::skipped(),
    };
    let name_irrelevant = match check_name_irrelevant_bounded(&game, opts.bound) {
        Ok(flag) => MaybeSkipped::Value(flag),
        Err(bound) if opts.strict => return Err(bound.into()),
        Err(_) => MaybeSkipped::skipped(),
    };
    let negation_symmetric = (game.kappa() == 2).then(|| check_negation_symmetric(&game));
    Ok(ClassifyReport {
        ordinary,
        weights,
        weights_mu1,
        weights_degenerate,
        renaming,
        name_irrelevant,
        negation_symmetric,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PotentialReport {
    pub is_potential: bool,
    pub weights: Vec<String>,
    pub potential_vector: Option<Vec<String>>,
    /// V^{P^r} of the renamed game, present only when a renaming was given.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub renamed_potential_vector: Option<Vec<String>>,
}

#[derive(Debug, Clone, Default)]
pub struct PotentialOptions {
    /// Comma-separated weights, e.g. `1/3,1/2`.
    pub weights: Option<String>,
    /// Comma-separated renaming cycles, e.g. `(),(1,2)`.
    pub renaming: Option<String>,
}

fn parse_weights(text: &str, n: usize) -> Result<Weights, CliError> {
    let parts = text.split(',').collect::<Vec<_>>();
    if parts.len() != n {
        return Err(input_err(format!(
            "expected {n} comma-separated weights, got {}",
            parts.len()
        )));
    }
    let values = parts
        .iter()
        .map(|tok| parse_rational(tok).map_err(|e| input_err(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Weights::new(values).map_err(|e| input_err(e.to_string()))
}

/// Splits `(1,2),(1,3),()` at the commas that separate the parenthesized
/// groups and parses each group as a permutation of 1..=κ.
fn parse_renaming(text: &str, n: usize, kappa: usize) -> Result<Renaming, CliError> {
    let mut groups = Vec::new();
    let mut depth = 0usize;
    let mut current = String::new();
    for c in text.chars() {
        match c {
            '(' => {
                depth += 1;
                current.push(c);
            }
            ')' => {
                depth = depth
                    .checked_sub(1)
                    .ok_or_else(|| input_err("unbalanced parentheses in renaming"))?;
                current.push(c);
            }
            ',' if depth == 0 => {
                groups.push(std::mem::take(&mut current));
            }
            _ => current.push(c),
        }
    }
    groups.push(current);
    if depth != 0 {
        return Err(input_err("unbalanced parentheses in renaming"));
    }
    if groups.len() != n {
        return Err(input_err(format!(
            "expected {n} comma-separated renaming permutations, got {}",
            groups.len()
        )));
    }
    let perms = groups
        .iter()
        .map(|g| Permutation::parse(kappa, g).map_err(|e| input_err(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Renaming::new(perms))
}

pub fn potential(file: &GameFile, opts: &PotentialOptions) -> Result<PotentialReport, CliError> {
    if opts.weights.is_some() && opts.renaming.is_some() {
        return Err(input_err(
            "--weights and --renaming cannot be combined: the renaming path solves \
             the unit-weight equation of the renamed game",
        ));
    }
    if let Some(renaming_text) = &opts.renaming {
        let game = file.to_game()?;
        let renaming = parse_renaming(renaming_text, game.n(), game.kappa())?;
        let unit = PotentialProblem::from_game(&game, vec![num_traits::One::one(); game.n()])
            .map_err(|e| input_err(e.to_string()))?;
        return Ok(match solve_renaming_potential(&game, &renaming) {
            Some(result) => {
                // re-verify on the original game before emission
                assert!(
                    verify_potential(&unit, &result.certificate.potential),
                    "solver produced a potential that fails direct verification"
                );
                PotentialReport {
                    is_potential: true,
                    weights: rationals_to_strings(&result.certificate.weights),
                    potential_vector: Some(rationals_to_strings(&result.certificate.potential)),
                    renamed_potential_vector: Some(rationals_to_strings(
                        &result.renamed_potential,
                    )),
                }
            }
            None => PotentialReport {
                is_potential: false,
                weights: rationals_to_strings(&vec![num_traits::One::one(); game.n()]),
                potential_vector: None,
                renamed_potential_vector: None,
            },
        });
    }
    let counts = file.expanded_counts();
    let weights = match &opts.weights {
        Some(text) => parse_weights(text, file.players)?.as_slice().to_vec(),
        None => vec![num_traits::One::one(); file.players],
    };
    let problem = PotentialProblem::new(counts, weights.clone(), file.payoffs.clone())
        .map_err(|e| input_err(e.to_string()))?;
    Ok(match solve_potential(&problem) {
        Some(cert) => {
            assert!(
                verify_potential(&problem, &cert.potential),
                "solver produced a potential that fails direct verification"
            );
            PotentialReport {
                is_potential: true,
                weights: rationals_to_strings(&cert.weights),
                potential_vector: Some(rationals_to_strings(&cert.potential)),
                renamed_potential_vector: None,
            }
        }
        None => PotentialReport {
            is_potential: false,
            weights: rationals_to_strings(&weights),
            potential_vector: None,
            renamed_potential_vector: None,
        },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasisReport {
    pub players: usize,
    pub strategies: usize,
    pub dimension: usize,
    pub basis: Vec<Vec<String>>,
}

pub fn basis(n: usize, kappa: usize, bound: Option<u128>) -> Result<BasisReport, CliError> {
    if n < 1 || kappa < 2 {
        return Err(input_err("need n >= 1 players and kappa >= 2 strategies"));
    }
    let bound = bound.unwrap_or(DEFAULT_BASIS_BOUND);
    let rows = symmetric_subspace_basis_bounded(n, kappa, &SymmetryKind::Ordinary, bound)?;
    Ok(BasisReport {
        players: n,
        strategies: kappa,
        dimension: rows.len(),
        basis: rows.iter().map(|r| rationals_to_strings(r)).collect(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaElement {
    pub pi: String,
    pub d: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StrategySymmetryReport {
    pub group_order: u128,
    pub count: usize,
    pub elements: Vec<ThetaElement>,
    pub pi_group: Vec<String>,
    pub name_irrelevant: bool,
}

pub fn strategy_symmetries(
    file: &GameFile,
    bound: Option<u128>,
) -> Result<StrategySymmetryReport, CliError> {
    let game = file.to_game()?;
    let bound = bound.unwrap_or(DEFAULT_THETA_BOUND);
    let group = strategy_symmetry_group_bounded(&game, bound)?;
    let elements: Vec<ThetaElement> = group
        .iter()
        .map(|theta| ThetaElement {
            pi: theta.pi().to_string(),
            d: theta.d().iter().map(|p| p.to_string()).collect(),
        })
        .collect();
    let mut pi_group: Vec<String> = Vec::new();
    for theta in &group {
        let s = theta.pi().to_string();
        if !pi_group.contains(&s) {
            pi_group.push(s);
        }
    }
    let order: usize = (1..=game.n()).product();
    Ok(StrategySymmetryReport {
        group_order: theta_order(game.n(), game.kappa()),
        count: elements.len(),
        elements,
        pi_group: pi_group.clone(),
        name_irrelevant: pi_group.len() == order,
    })
}

fn text_option(values: &Option<Vec<String>>) -> String {
    match values {
        Some(v) => v.join(","),
        None => "null".to_string(),
    }
}

/// Renders any of the serializable reports in the chosen format.
pub fn render<T: Serialize + ReportText>(report: &T, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("reports serialize"),
        Format::Text => report.text(),
    }
}

/// Human-readable rendering of a report.
pub trait ReportText {
    fn text(&self) -> String;
}

impl ReportText for ClassifyReport {
    fn text(&self) -> String {
        let mut lines = vec![format!("ordinary: {}", self.ordinary)];
        match (&self.weights, self.weights_degenerate) {
            (Some(w), _) => {
                lines.push(format!("weights: {}", w.join(",")));
                if let Some(mu1) = &self.weights_mu1 {
                    lines.push(format!("weights (mu_1 = 1): {}", mu1.join(",")));
                }
            }
            (None, true) => lines.push("weights: undetermined (zero first payoff)".into()),
            (None, false) => lines.push("weights: null".into()),
        }
        match &self.renaming {
            MaybeSkipped::Value(r) => lines.push(format!("renaming: {}", text_option(r))),
            MaybeSkipped::Skipped(_) => lines.push("renaming: skipped".into()),
        }
        match &self.name_irrelevant {
            MaybeSkipped::Value(b) => lines.push(format!("name_irrelevant: {b}")),
            MaybeSkipped::Skipped(_) => lines.push("name_irrelevant: skipped".into()),
        }
        if let Some(neg) = self.negation_symmetric {
            lines.push(format!("negation_symmetric: {neg}"));
        }
        lines.join("\n")
    }
}

impl ReportText for PotentialReport {
    fn text(&self) -> String {
        let mut lines = vec![
            format!("is_potential: {}", self.is_potential),
            format!("weights: {}", self.weights.join(",")),
        ];
        lines.push(format!(
            "potential_vector: {}",
            text_option(&self.potential_vector)
        ));
        if let Some(renamed) = &self.renamed_potential_vector {
            lines.push(format!("renamed_potential_vector: {}", renamed.join(",")));
        }
        lines.join("\n")
    }
}

impl ReportText for BasisReport {
    fn text(&self) -> String {
        let mut lines = vec![format!(
            "symmetric subspace of {} players x {} strategies",
            self.players, self.strategies
        )];
        lines.push(format!("dimension: {}", self.dimension));
        for (i, row) in self.basis.iter().enumerate() {
            lines.push(format!("basis[{}]: {}", i + 1, row.join(",")));
        }
        lines.join("\n")
    }
}

impl ReportText for StrategySymmetryReport {
    fn text(&self) -> String {
        let mut lines = vec![format!(
            "strategy symmetries: {} of {} block permutations",
            self.count, self.group_order
        )];
        for e in &self.elements {
            lines.push(format!("  (pi {}; d {})", e.pi, e.d.join(", ")));
        }
        lines.push(format!("player shadows Pi(G): {}", self.pi_group.join(" ")));
        lines.push(format!("name_irrelevant: {}", self.name_irrelevant));
        lines.join("\n")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    const MATCHING_PENNIES: &str = "\
# Matching Pennies
players: 2
strategies: 2
payoffs:
1 -1 -1 1
-1 1 1 -1
";

    const BATTLE_OF_SEXES: &str = "\
players: 2
strategies: 2
payoffs:
2 0 0 1
1 0 0 2
";

    const TABLE1: &str = "\
players: 2
strategies: 2
payoffs:
2 4 6 4
3 9 6 6
";

    #[test]
    fn parses_the_fixture_files() {
        let file = parse_game_file(MATCHING_PENNIES).unwrap();
        assert_eq!(file.players, 2);
        assert_eq!(file.strategies, vec![2]);
        assert_eq!(file.payoffs[0], vec![rat(1), rat(-1), rat(-1), rat(1)]);
        let game = file.to_game().unwrap();
        assert_eq!(game.n(), 2);
    }

    #[test]
    fn parses_fractions_and_decimals() {
        let text = "players: 2\nstrategies: 2\npayoffs:\n1/2 0.25 -3 4\n0 0 0 0\n";
        let file = parse_game_file(text).unwrap();
        assert_eq!(file.payoffs[0][0], ratio(1, 2));
        assert_eq!(file.payoffs[0][1], ratio(1, 4));
    }

    #[test]
    fn rejects_malformed_files() {
        for bad in [
            "",
            "players: 2\n",
            "players: 2\nstrategies: 2\npayoffs:\n1 2 3 4\n",
            "players: 2\nstrategies: 2\npayoffs:\n1 2 3\n1 2 3 4\n",
            "players: 2\nstrategies: 2 2 2\npayoffs:\n1 2 3 4\n1 2 3 4\n",
            "players: 2\nstrategies: 1\npayoffs:\n1 2\n1 2\n",
            "players: 2\nstrategies: 2\npayoffs:\n1 2 3 x\n1 2 3 4\n",
            "players: zwei\nstrategies: 2\npayoffs:\n1 2 3 4\n1 2 3 4\n",
            "mystery: 4\n",
        ] {
            assert!(parse_game_file(bad).is_err(), "accepted {bad:?}");
        }
    }

    #[test]
    fn per_player_counts_only_for_potential() {
        let text = "players: 2\nstrategies: 2 3\npayoffs:\n1 2 3 4 5 6\n6 5 4 3 2 1\n";
        let file = parse_game_file(text).unwrap();
        assert!(file.to_game().is_err());
        let report = potential(&file, &PotentialOptions::default()).unwrap();
        assert!(report.is_potential || report.potential_vector.is_none());
        assert!(classify(&file, &ClassifyOptions::default()).is_err());
    }

    #[test]
    fn classify_matching_pennies() {
        let file = parse_game_file(MATCHING_PENNIES).unwrap();
        let report = classify(&file, &ClassifyOptions::default()).unwrap();
        assert!(!report.ordinary);
        assert_eq!(report.weights, None);
        assert!(!report.weights_degenerate);
        assert_eq!(report.renaming, MaybeSkipped::Value(None));
        assert_eq!(report.name_irrelevant, MaybeSkipped::Value(true));
        assert_eq!(report.negation_symmetric, Some(false));
    }

    #[test]
    fn classify_battle_of_sexes() {
        let file = parse_game_file(BATTLE_OF_SEXES).unwrap();
        let report = classify(&file, &ClassifyOptions::default()).unwrap();
        assert!(!report.ordinary);
        assert_eq!(
            report.renaming,
            MaybeSkipped::Value(Some(vec!["()".to_string(), "(1,2)".to_string()]))
        );
    }

    #[test]
    fn classify_weighted_table1() {
        let file = parse_game_file(TABLE1).unwrap();
        let report = classify(&file, &ClassifyOptions::default()).unwrap();
        assert_eq!(
            report.weights,
            Some(vec!["3".to_string(), "2".to_string()])
        );
        assert_eq!(
            report.weights_mu1,
            Some(vec!["1".to_string(), "2/3".to_string()])
        );
    }

    #[test]
    fn classify_respects_bounds() {
        let file = parse_game_file(MATCHING_PENNIES).unwrap();
        let tight = ClassifyOptions {
            bound: 1,
            strict: false,
        };
        let report = classify(&file, &tight).unwrap();
        assert!(matches!(report.name_irrelevant, MaybeSkipped::Skipped(_)));
        let strict = ClassifyOptions {
            bound: 1,
            strict: true,
        };
        let err = classify(&file, &strict).unwrap_err();
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn potential_reports() {
        let file = parse_game_file(MATCHING_PENNIES).unwrap();
        let report = potential(&file, &PotentialOptions::default()).unwrap();
        assert!(!report.is_potential);
        assert_eq!(report.potential_vector, None);

        let table5 = "players: 2\nstrategies: 2\npayoffs:\n6 12 18 12\n6 18 12 12\n";
        let file = parse_game_file(table5).unwrap();
        let report = potential(&file, &PotentialOptions::default()).unwrap();
        assert!(report.is_potential);
        let vec = report.potential_vector.unwrap();
        // up to gauge the potential is [-12, 0, 0, 0]; the solver's pick is exact
        let values: Vec<Rational> = vec.iter().map(|s| parse_rational(s).unwrap()).collect();
        let shift = &values[0] - rat(-12);
        assert_eq!(values[1], shift);
        assert_eq!(values[2], shift);
        assert_eq!(values[3], shift);
    }

    #[test]
    fn potential_with_weights_flag() {
        let file = parse_game_file(TABLE1).unwrap();
        let opts = PotentialOptions {
            weights: Some("1/3,1/2".to_string()),
            renaming: None,
        };
        let report = potential(&file, &opts).unwrap();
        assert!(report.is_potential);
        assert_eq!(report.weights, vec!["1/3", "1/2"]);
        assert!(potential(
            &file,
            &PotentialOptions {
                weights: Some("1/3".to_string()),
                renaming: None
            }
        )
        .is_err());
        assert!(potential(
            &file,
            &PotentialOptions {
                weights: Some("0,1".to_string()),
                renaming: None
            }
        )
        .is_err());
    }

    #[test]
    fn potential_with_renaming_flag() {
        let file = parse_game_file(BATTLE_OF_SEXES).unwrap();
        let opts = PotentialOptions {
            weights: None,
            renaming: Some("(),(1,2)".to_string()),
        };
        let report = potential(&file, &opts).unwrap();
        assert!(report.is_potential);
        assert_eq!(
            report.potential_vector,
            Some(vec![
                "0".to_string(),
                "-1".to_string(),
                "-2".to_string(),
                "0".to_string()
            ])
        );
        assert_eq!(
            report.renamed_potential_vector,
            Some(vec![
                "-1".to_string(),
                "0".to_string(),
                "0".to_string(),
                "-2".to_string()
            ])
        );
        // combining flags is an input error
        let both = PotentialOptions {
            weights: Some("1,1".to_string()),
            renaming: Some("(),(1,2)".to_string()),
        };
        assert_eq!(potential(&file, &both).unwrap_err().exit_code(), 2);
        // malformed renaming
        let bad = PotentialOptions {
            weights: None,
            renaming: Some("(1,(2)".to_string()),
        };
        assert_eq!(potential(&file, &bad).unwrap_err().exit_code(), 2);
    }

    #[test]
    fn basis_reports() {
        let report = basis(2, 2, None).unwrap();
        assert_eq!(report.dimension, 4);
        assert_eq!(basis(3, 3, None).unwrap().dimension, 18);
        let err = basis(3, 3, Some(10)).unwrap_err();
        assert_eq!(err.exit_code(), 3);
        assert!(basis(0, 2, None).is_err());
    }

    #[test]
    fn strategy_symmetry_reports() {
        let file = parse_game_file(MATCHING_PENNIES).unwrap();
        let report = strategy_symmetries(&file, None).unwrap();
        assert_eq!(report.count, 4);
        assert_eq!(report.group_order, 8);
        assert!(report.name_irrelevant);
        assert_eq!(report.pi_group.len(), 2);
        let zero = "players: 2\nstrategies: 2\npayoffs:\n0 0 0 0\n0 0 0 0\n";
        let report = strategy_symmetries(&parse_game_file(zero).unwrap(), None).unwrap();
        assert_eq!(report.count, 8);
        let generic = "players: 2\nstrategies: 2\npayoffs:\n1 2 3 4\n5 6 7 8\n";
        let report = strategy_symmetries(&parse_game_file(generic).unwrap(), None).unwrap();
        assert_eq!(report.count, 1);
    }

    #[test]
    fn reports_round_trip_as_json() {
        let file = parse_game_file(TABLE1).unwrap();
        let report = classify(&file, &ClassifyOptions::default()).unwrap();
        let rendered = render(&report, Format::Json);
        let parsed: serde_json::Value = serde_json::from_str(&rendered).unwrap();
        assert_eq!(parsed["ordinary"], serde_json::Value::Bool(false));
        assert_eq!(parsed["weights"][0], "3");
        let text = render(&report, Format::Text);
        assert!(text.contains("weights: 3,2"));

        let report = potential(&file, &PotentialOptions::default()).unwrap();
        let rendered = render(&report, Format::Json);
        let parsed: serde_json::Value = serde_json::from_str(&rendered).unwrap();
        assert_eq!(parsed["is_potential"], serde_json::Value::Bool(false));
    }
}
