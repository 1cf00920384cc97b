//! JSON problem configuration.

use std::fmt;

use rider_core::{Board, GeometryError, MoveType, Point2, Rider};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConfigError {
    Parse(String),
    NonConvexBoard,
    ParallelMoves,
    Geometry(GeometryError),
    Invalid(String),
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::Parse(s) => write!(f, "cannot parse configuration: {s}"),
            ConfigError::NonConvexBoard => write!(f, "board is not strictly convex"),
            ConfigError::ParallelMoves => write!(f, "moves are parallel"),
            ConfigError::Geometry(e) => write!(f, "{e}"),
            ConfigError::Invalid(s) => write!(f, "{s}"),
        }
    }
}

impl std::error::Error for ConfigError {}

impl From<GeometryError> for ConfigError {
    fn from(e: GeometryError) -> Self {
        match e {
            GeometryError::NonConvexBoard => ConfigError::NonConvexBoard,
            GeometryError::ParallelMoves => ConfigError::ParallelMoves,
            e => ConfigError::Geometry(e),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoardSpec {
    Square,
    Corners(Vec<Point2>),
}

impl BoardSpec {
    pub fn build(&self) -> Result<Board, ConfigError> {
        match self {
            BoardSpec::Square => Ok(Board::square()),
            BoardSpec::Corners(c) => Ok(Board::new(c.clone())?),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemConfig {
    pub board_spec: BoardSpec,
    pub board: Board,
    pub rider: Rider,
    pub q: Option<usize>,
    pub n_max: Option<usize>,
    pub max_steps: Option<usize>,
    pub start: Option<Point2>,
    pub first_move: Option<MoveType>,
    pub out: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawBoard {
    Named(String),
    Corners { corners: Vec<[String; 2]> },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawConfig {
    board: RawBoard,
    moves: [[i64; 2]; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    q: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    n_max: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    max_steps: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    start: Option<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    first_move: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    out: Option<String>,
}

fn parse_point(p: &[String; 2]) -> Result<Point2, ConfigError> {
    let x = p[0].parse().map_err(|e| ConfigError::Parse(format!("{e}")))?;
    let y = p[1].parse().map_err(|e| ConfigError::Parse(format!("{e}")))?;
    Ok(Point2::new(x, y))
}

/// Parses a board given as `"square"` or as a corner list document.
pub fn parse_board_json(text: &str) -> Result<BoardSpec, ConfigError> {
    let raw: RawBoard = serde_json::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))?;
    board_from_raw(raw)
}

fn board_from_raw(raw: RawBoard) -> Result<BoardSpec, ConfigError> {
    match raw {
        RawBoard::Named(s) if s == "square" => Ok(BoardSpec::Square),
        RawBoard::Named(s) => Err(ConfigError::Invalid(format!("unknown board {s:?}"))),
        RawBoard::Corners { corners } => Ok(BoardSpec::Corners(corners.iter().map(parse_point).collect::<Result<_, _>>()?)),
    }
}

pub fn parse_config(text: &str) -> Result<ProblemConfig, ConfigError> {
    let raw: RawConfig = serde_json::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))?;
    let board_spec = board_from_raw(raw.board)?;
    let board = board_spec.build()?;
    let [[c1, d1], [c2, d2]] = raw.moves;
    let rider = Rider::from_pairs((c1, d1), (c2, d2))?;
    let first_move = match raw.first_move {
        None => None,
        Some(n) => Some(MoveType::from_number(n).ok_or_else(|| ConfigError::Invalid(format!("first_move must be 1 or 2, got {n}")))?),
    };
    let start = raw.start.as_ref().map(parse_point).transpose()?;
    Ok(ProblemConfig {
        board_spec,
        board,
        rider,
        q: raw.q,
        n_max: raw.n_max,
        max_steps: raw.max_steps,
        start,
        first_move,
        out: raw.out,
    })
}

fn point_strings(p: &Point2) -> [String; 2] {
    [p.x.to_string(), p.y.to_string()]
}

/// Serializes with canonical moves; `parse_config` inverts it.
pub fn config_to_json(cfg: &ProblemConfig) -> String {
    let [m1, m2] = cfg.rider.moves();
    let raw = RawConfig {
        board: match &cfg.board_spec {
            BoardSpec::Square => RawBoard::Named("square".into()),
            BoardSpec::Corners(c) => RawBoard::Corners { corners: c.iter().map(point_strings).collect() },
        },
        moves: [[m1.c(), m1.d()], [m2.c(), m2.d()]],
        q: cfg.q,
        n_max: cfg.n_max,
        max_steps: cfg.max_steps,
        start: cfg.start.as_ref().map(point_strings),
        first_move: cfg.first_move.map(MoveType::number),
        out: cfg.out.clone(),
    };
    serde_json::to_string_pretty(&raw).expect("config serializes")
}
