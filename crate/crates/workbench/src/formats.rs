//! Text, CSV and JSON file formats. Exact values are written as `p/q`
//! strings; `decimal` adds clearly labelled approximations.

use std::fmt;

use num_bigint::BigUint;
use rider_core::{
    point_denominator, ConjectureReport, CountSeries, DenominatorReport, MoveType, Point2, QuasipolynomialFit, Rider,
    RigidCycle, Trajectory, TrajectoryStatus,
};
use serde::Serialize;

use crate::float_sim::FloatPath;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormatError(pub String);

impl fmt::Display for FormatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "format error: {}", self.0)
    }
}

impl std::error::Error for FormatError {}

pub fn status_name(s: TrajectoryStatus) -> String {
    match s {
        TrajectoryStatus::Cyclic => "cyclic".into(),
        TrajectoryStatus::StoppedBothEnds => "stopped_both_ends".into(),
        TrajectoryStatus::StoppedForward => "stopped_forward".into(),
        TrajectoryStatus::StoppedBackward => "stopped_backward".into(),
        TrajectoryStatus::Truncated { cap } => format!("truncated {cap}"),
    }
}

fn parse_status(s: &str) -> Result<TrajectoryStatus, FormatError> {
    Ok(match s {
        "cyclic" => TrajectoryStatus::Cyclic,
        "stopped_both_ends" => TrajectoryStatus::StoppedBothEnds,
        "stopped_forward" => TrajectoryStatus::StoppedForward,
        "stopped_backward" => TrajectoryStatus::StoppedBackward,
        _ => match s.strip_prefix("truncated ") {
            Some(n) => TrajectoryStatus::Truncated { cap: n.trim().parse().map_err(|_| FormatError(format!("bad cap {n:?}")))? },
            None => return Err(FormatError(format!("unknown status {s:?}"))),
        },
    })
}

fn approx(p: &Point2) -> String {
    let (x, y) = p.to_f64();
    format!("{x:.6},{y:.6}")
}

/// Header lines `# moves`, `# first_move`, `# status`, then one `x,y`
/// point per line.
pub fn trajectory_text(rider: &Rider, t: &Trajectory, decimal: bool) -> String {
    let [m1, m2] = rider.moves();
    let mut s = format!("# moves {m1} {m2}\n# first_move {}\n# status {}\n", t.first_move_type.number(), status_name(t.status));
    for p in &t.points {
        if decimal {
            s.push_str(&format!("{p}  # approx {}\n", approx(p)));
        } else {
            s.push_str(&format!("{p}\n"));
        }
    }
    s
}

pub fn parse_trajectory_text(text: &str) -> Result<(Rider, Trajectory), FormatError> {
    let mut rider = None;
    let mut first = None;
    let mut status = None;
    let mut points = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(h) = line.strip_prefix('#') {
            let h = h.trim();
            if let Some(m) = h.strip_prefix("moves ") {
                let mv: Vec<&str> = m.split_whitespace().collect();
                if mv.len() != 2 {
                    return Err(FormatError(format!("bad moves header {m:?}")));
                }
                let pm = |s: &str| s.parse::<rider_core::Move>().map_err(|e| FormatError(e.to_string()));
                rider = Some(Rider::new(pm(mv[0])?, pm(mv[1])?).map_err(|e| FormatError(e.to_string()))?);
            } else if let Some(f) = h.strip_prefix("first_move ") {
                first = f.trim().parse::<u8>().ok().and_then(MoveType::from_number);
            } else if let Some(st) = h.strip_prefix("status ") {
                status = Some(parse_status(st.trim())?);
            }
            continue;
        }
        let body = line.split('#').next().unwrap_or("").trim();
        points.push(body.parse::<Point2>().map_err(|e| FormatError(e.to_string()))?);
    }
    let rider = rider.ok_or_else(|| FormatError("missing moves header".into()))?;
    let first_move_type = first.ok_or_else(|| FormatError("missing first_move header".into()))?;
    let status = status.ok_or_else(|| FormatError("missing status header".into()))?;
    if points.is_empty() {
        return Err(FormatError("no points".into()));
    }
    Ok((rider, Trajectory { points, first_move_type, status }))
}

fn pair(p: &Point2) -> [String; 2] {
    [p.x.to_string(), p.y.to_string()]
}

fn approx_pair(p: &Point2, decimal: bool) -> Option<[f64; 2]> {
    decimal.then(|| {
        let (x, y) = p.to_f64();
        [x, y]
    })
}

#[derive(Serialize)]
struct TrajectoryJson {
    first_move: u8,
    status: String,
    points: Vec<[String; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    approx_points: Option<Vec<[f64; 2]>>,
}

fn trajectory_json(t: &Trajectory, decimal: bool) -> TrajectoryJson {
    TrajectoryJson {
        first_move: t.first_move_type.number(),
        status: status_name(t.status),
        points: t.points.iter().map(pair).collect(),
        approx_points: decimal.then(|| t.points.iter().map(|p| approx_pair(p, true).unwrap()).collect()),
    }
}

pub fn trajectories_json(rider: &Rider, ts: &[Trajectory], decimal: bool) -> String {
    #[derive(Serialize)]
    struct Doc {
        moves: [String; 2],
        trajectories: Vec<TrajectoryJson>,
    }
    let [m1, m2] = rider.moves();
    let doc = Doc { moves: [m1.to_string(), m2.to_string()], trajectories: ts.iter().map(|t| trajectory_json(t, decimal)).collect() };
    serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
}

fn fixed(v: f64) -> String {
    let s = format!("{v:.12}");
    match s.strip_prefix('-') {
        Some(rest) if rest.bytes().all(|b| b == b'0' || b == b'.') => rest.to_string(),
        _ => s,
    }
}

pub fn float_path_csv(path: &FloatPath) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["step", "x", "y", "dist_to_limit"]).expect("in-memory write");
    for (i, (p, d)) in path.points.iter().zip(&path.distances).enumerate() {
        w.write_record([i.to_string(), fixed(p.0), fixed(p.1), format!("{d:.12e}")])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

#[derive(Serialize)]
struct ContributionJson {
    category: &'static str,
    point: [String; 2],
    denominator: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    approx_point: Option<[f64; 2]>,
}

#[derive(Serialize)]
struct DenominatorJson {
    q: usize,
    denominator: String,
    contributions: Vec<ContributionJson>,
}

pub fn denominator_json(report: &DenominatorReport, decimal: bool) -> String {
    let doc = DenominatorJson {
        q: report.q,
        denominator: report.value.to_string(),
        contributions: report
            .contributions
            .iter()
            .map(|c| ContributionJson {
                category: c.category.name(),
                point: pair(&c.point),
                denominator: c.denominator.to_string(),
                approx_point: approx_pair(&c.point, decimal),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
}

pub fn denominator_csv(report: &DenominatorReport) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["category", "x", "y", "denominator"]).expect("in-memory write");
    for c in &report.contributions {
        w.write_record([c.category.name().to_string(), c.point.x.to_string(), c.point.y.to_string(), c.denominator.to_string()])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

pub fn count_series_csv(series: &CountSeries) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["n", "u"]).expect("in-memory write");
    for (n, u) in &series.values {
        w.write_record([n.to_string(), u.to_string()]).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

/// Reads `n,u` rows back.
pub fn parse_count_csv(text: &str) -> Result<Vec<(usize, BigUint)>, FormatError> {
    let mut r = csv::Reader::from_reader(text.as_bytes());
    let mut out = Vec::new();
    for rec in r.records() {
        let rec = rec.map_err(|e| FormatError(e.to_string()))?;
        if rec.len() != 2 {
            return Err(FormatError(format!("expected 2 fields, got {}", rec.len())));
        }
        let n = rec[0].trim().parse().map_err(|_| FormatError(format!("bad n {:?}", &rec[0])))?;
        let u = rec[1].trim().parse().map_err(|_| FormatError(format!("bad u {:?}", &rec[1])))?;
        out.push((n, u));
    }
    Ok(out)
}

#[derive(Serialize)]
struct FitJson {
    period: usize,
    degree: usize,
    coefficients: Vec<Vec<String>>,
    verified_range: usize,
}

/// `coefficients[r][k]` multiplies `n^k` for `n ≡ r (mod period)`.
pub fn fit_json(fit: &QuasipolynomialFit) -> String {
    let doc = FitJson {
        period: fit.period,
        degree: fit.degree,
        coefficients: fit.constituents.iter().map(|c| c.iter().map(|r| r.to_string()).collect()).collect(),
        verified_range: fit.verified_range,
    };
    serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
}

pub fn conjecture_json(r: &ConjectureReport) -> String {
    #[derive(Serialize)]
    struct Doc {
        q: usize,
        period: usize,
        denominator: String,
        equal: bool,
        divides: bool,
        verified_range: usize,
    }
    let doc = Doc {
        q: r.q,
        period: r.period,
        denominator: r.denominator.to_string(),
        equal: r.equal,
        divides: r.divides,
        verified_range: r.verified_range,
    };
    serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
}

/// Summary of an enumeration complete up to `max_len`.
pub fn rigid_cycles_json(cycles: &[RigidCycle], max_len: usize, decimal: bool) -> String {
    #[derive(Serialize)]
    struct Cycle {
        length: usize,
        verdict: &'static str,
        first_move: u8,
        points: Vec<[String; 2]>,
        point_denominators: Vec<String>,
        #[serde(skip_serializing_if = "Option::is_none")]
        approx_points: Option<Vec<[f64; 2]>>,
    }
    #[derive(Serialize)]
    struct Doc {
        max_len: usize,
        count: usize,
        cycles: Vec<Cycle>,
    }
    let doc = Doc {
        max_len,
        count: cycles.len(),
        cycles: cycles
            .iter()
            .map(|c| Cycle {
                length: c.configuration.len(),
                verdict: "rigid_cycle",
                first_move: c.trajectory.first_move_type.number(),
                points: c.configuration.iter().map(pair).collect(),
                point_denominators: c.configuration.iter().map(|p| point_denominator(p).to_string()).collect(),
                approx_points: decimal.then(|| c.configuration.iter().map(|p| approx_pair(p, true).unwrap()).collect()),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializes") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use rider_core::{trace, Board};

    #[test]
    fn trajectory_text_round_trip() {
        let r = Rider::orthonightrider();
        let t = trace(&Board::square(), &r, &Point2::frac(1, 3, 0, 1), MoveType::First, 10).unwrap();
        let text = trajectory_text(&r, &t, false);
        assert_eq!(text, "# moves 2,1 1,-2\n# first_move 1\n# status cyclic\n1/3,0\n1,1/3\n2/3,1\n0,2/3\n");
        assert_eq!(parse_trajectory_text(&text).unwrap(), (r, t.clone()));
        assert_eq!(parse_trajectory_text(&trajectory_text(&r, &t, true)).unwrap(), (r, t));
    }

    #[test]
    fn count_csv_round_trip() {
        let s = rider_core::count_series(&Rider::bishop(), 2, 5);
        let text = count_series_csv(&s);
        assert!(text.starts_with("n,u\n0,0\n1,0\n2,4\n"));
        assert_eq!(parse_count_csv(&text).unwrap(), s.values);
    }

    #[test]
    fn denominator_json_shape() {
        let rep = rider_core::denominator(&Board::square(), &Rider::orthonightrider(), 2);
        let v: serde_json::Value = serde_json::from_str(&denominator_json(&rep, false)).unwrap();
        assert_eq!(v["q"], 2);
        assert_eq!(v["denominator"], "2");
        assert!(v["contributions"].as_array().unwrap().iter().any(|c| c["point"][1] == "1/2" && c["denominator"] == "2"));
    }
}
