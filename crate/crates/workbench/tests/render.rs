use rider_core::{augment, crossing_points, trace, Board, MoveType, Point2, Rider};
use rider_workbench::render::{render_svg, RenderSpec};

#[test]
fn augmented_crossings_are_marked_and_labelled() {
    let b = Board::square();
    let r = Rider::inclined_nightrider();
    let t1 = trace(&b, &r, &Point2::int(0, 0), MoveType::First, 2).unwrap();
    let t2 = trace(&b, &r, &Point2::int(1, 1), MoveType::Second, 2).unwrap();
    let (a1, a2) = (augment(&b, &r, &t1), augment(&b, &r, &t2));
    let crossings: Vec<Point2> = crossing_points(&b, &a1, 0, &a2, 1).into_iter().map(|c| c.location).collect();
    let spec = RenderSpec { trajectories: vec![t1, t2], augmentations: vec![a1, a2], crossings, ..RenderSpec::default() };
    let svg = render_svg(&b, &spec);
    assert!(svg.contains(">(2/3,1/3)</text>"));
    assert!(svg.contains(">(5/6,1/6)</text>"));
    assert_eq!(svg, render_svg(&b, &spec));
}

#[test]
fn polylines_follow_trajectory_points() {
    let b = Board::square();
    let r = Rider::orthonightrider();
    let t = trace(&b, &r, &Point2::int(0, 0), MoveType::First, 5).unwrap();
    let spec = RenderSpec { width: 140, height: 140, trajectories: vec![t.clone()], ..RenderSpec::default() };
    let svg = render_svg(&b, &spec);
    let lines: Vec<&str> = svg.lines().filter(|l| l.contains("<line")).collect();
    assert_eq!(lines.len(), t.len() - 1);
    // unit square maps to [40, 100] with y flipped
    let at = |p: &Point2| {
        let (x, y) = p.to_f64();
        (format!("{:.3}", 40.0 + 60.0 * x), format!("{:.3}", 100.0 - 60.0 * y))
    };
    for (i, l) in lines.iter().enumerate() {
        let (x1, y1) = at(&t.points[i]);
        let (x2, y2) = at(&t.points[i + 1]);
        assert!(l.contains(&format!(r#"x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}""#)), "{l}");
        assert_eq!(l.contains("stroke-dasharray"), t.segment_type(i) == MoveType::Second);
    }
}

#[test]
fn other_boards_render() {
    let tri = Board::new(vec![Point2::int(0, 0), Point2::int(2, 0), Point2::int(0, 1)]).unwrap();
    let svg = render_svg(&tri, &RenderSpec::default());
    assert_eq!(svg.matches("<polygon").count(), 1);
    assert!(svg.ends_with("</svg>\n"));
}
