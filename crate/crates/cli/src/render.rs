//! SVG drawings of a curve pair.
//!
//! Coordinates are integers and element ids are derived from crossing
//! indices, so the same pair always renders to the same bytes.

use std::fmt::Write as _;

use fillpair_core::origami::Direction;
use fillpair_core::{cylinders, to_origami, CurvePair};

use crate::error::CliError;

const UNIT: usize = 60;
const MARGIN: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    /// `α` as a horizontal segment with identified ends, `β` as vertical
    /// chords whose top and bottom ends carry gluing labels.
    Strip,
    /// One unit square per crossing, rows following `α`.
    Tiling,
}

pub fn render(pair: &CurvePair, style: Style) -> Result<String, CliError> {
    if pair.n() == 0 {
        return Err(CliError::failure(
            "nothing to render: the pair has no crossings",
        ));
    }
    Ok(match style {
        Style::Strip => strip(pair),
        Style::Tiling => tiling(pair),
    })
}

/// Position of every crossing along `α`, starting from crossing 0.
fn alpha_positions(pair: &CurvePair) -> Vec<usize> {
    let mut pos = vec![0; pair.n()];
    for (k, x) in pair.alpha().orbit_of(0).into_iter().enumerate() {
        pos[x] = k;
    }
    pos
}

fn header(out: &mut String, width: usize, height: usize, title: &str) {
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {width} {height}\" width=\"{width}\" height=\"{height}\" font-family=\"sans-serif\" font-size=\"14\">"
    );
    let _ = writeln!(out, "  <title>{title}</title>");
    let _ = writeln!(
        out,
        "  <rect id=\"background\" x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"white\"/>"
    );
}

/// Top end of the chord at `x` is labelled by the position of `x` along
/// `α`; the bottom end by the label of the chord whose top end is glued to
/// it, namely the `β`-predecessor of `x`.
fn strip(pair: &CurvePair) -> String {
    let n = pair.n();
    let pos = alpha_positions(pair);
    let order = pair.alpha().orbit_of(0);
    let beta_back = pair.beta().inverse();
    let width = 2 * MARGIN + (n + 1) * UNIT;
    let height = 2 * MARGIN + 3 * UNIT;
    let axis = MARGIN + 3 * UNIT / 2;
    let top = MARGIN + UNIT / 2;
    let bottom = MARGIN + 5 * UNIT / 2;
    let left = MARGIN;
    let right = MARGIN + (n + 1) * UNIT;

    let mut out = String::new();
    header(&mut out, width, height, &format!("strip diagram, n = {n}"));
    out.push_str("  <g id=\"alpha\" stroke=\"#1f4e9c\" stroke-width=\"2\">\n");
    let _ = writeln!(
        out,
        "    <line id=\"alpha-segment\" x1=\"{left}\" y1=\"{axis}\" x2=\"{right}\" y2=\"{axis}\"/>"
    );
    let _ = writeln!(
        out,
        "    <circle id=\"alpha-end-left\" cx=\"{left}\" cy=\"{axis}\" r=\"4\" fill=\"white\"/>"
    );
    let _ = writeln!(
        out,
        "    <circle id=\"alpha-end-right\" cx=\"{right}\" cy=\"{axis}\" r=\"4\" fill=\"white\"/>"
    );
    out.push_str("  </g>\n");
    out.push_str("  <g id=\"beta\" stroke=\"#b03a2e\" stroke-width=\"2\">\n");
    for &x in &order {
        let cx = MARGIN + (pos[x] + 1) * UNIT;
        let top_label = pos[x] + 1;
        let bottom_label = pos[beta_back.apply(x)] + 1;
        let _ = writeln!(out, "    <g id=\"chord-{x}\" data-crossing=\"{x}\">");
        let _ = writeln!(
            out,
            "      <line x1=\"{cx}\" y1=\"{top}\" x2=\"{cx}\" y2=\"{bottom}\"/>"
        );
        let _ = writeln!(
            out,
            "      <text id=\"chord-{x}-top\" x=\"{cx}\" y=\"{}\" text-anchor=\"middle\" stroke=\"none\" fill=\"black\">{top_label}</text>",
            top - 8
        );
        let _ = writeln!(
            out,
            "      <text id=\"chord-{x}-bottom\" x=\"{cx}\" y=\"{}\" text-anchor=\"middle\" stroke=\"none\" fill=\"black\">{bottom_label}</text>",
            bottom + 20
        );
        out.push_str("    </g>\n");
    }
    out.push_str("  </g>\n</svg>\n");
    out
}

/// Squares labelled by crossing; each outer edge carries the square it is
/// glued to.
fn tiling(pair: &CurvePair) -> String {
    let origami = to_origami(pair).expect("a valid pair is transitive");
    let rows = cylinders(&origami, Direction::Horizontal);
    let right = origami.right();
    let top = origami.top();
    let left_of = right.inverse();
    let below = top.inverse();
    let longest = rows.iter().map(Vec::len).max().unwrap_or(0);
    let row_pitch = UNIT + UNIT / 2;
    let width = 2 * MARGIN + longest * UNIT;
    let height = 2 * MARGIN + rows.len() * row_pitch - UNIT / 2;

    let mut out = String::new();
    header(
        &mut out,
        width,
        height,
        &format!("square tiling, {} squares", pair.n()),
    );
    for (r, row) in rows.iter().enumerate() {
        let _ = writeln!(out, "  <g id=\"row-{r}\">");
        let y = MARGIN + r * row_pitch;
        for (c, &x) in row.iter().enumerate() {
            let sx = MARGIN + c * UNIT;
            let mid_x = sx + UNIT / 2;
            let _ = writeln!(out, "    <g id=\"square-{x}\" data-square=\"{x}\">");
            let _ = writeln!(
                out,
                "      <rect x=\"{sx}\" y=\"{y}\" width=\"{UNIT}\" height=\"{UNIT}\" fill=\"#f4f1e8\" stroke=\"black\" stroke-width=\"1\"/>"
            );
            let _ = writeln!(
                out,
                "      <text x=\"{mid_x}\" y=\"{}\" text-anchor=\"middle\" font-size=\"16\">{x}</text>",
                y + UNIT / 2 + 6
            );
            let _ = writeln!(
                out,
                "      <text class=\"glue-top\" x=\"{mid_x}\" y=\"{}\" text-anchor=\"middle\" font-size=\"10\" fill=\"#b03a2e\">{}</text>",
                y + 12,
                top.apply(x)
            );
            let _ = writeln!(
                out,
                "      <text class=\"glue-bottom\" x=\"{mid_x}\" y=\"{}\" text-anchor=\"middle\" font-size=\"10\" fill=\"#b03a2e\">{}</text>",
                y + UNIT - 4,
                below.apply(x)
            );
            if c == 0 {
                let _ = writeln!(
                    out,
                    "      <text class=\"glue-left\" x=\"{}\" y=\"{}\" text-anchor=\"start\" font-size=\"10\" fill=\"#1f4e9c\">{}</text>",
                    sx + 3,
                    y + UNIT / 2 + 4,
                    left_of.apply(x)
                );
            }
            if c + 1 == row.len() {
                let _ = writeln!(
                    out,
                    "      <text class=\"glue-right\" x=\"{}\" y=\"{}\" text-anchor=\"end\" font-size=\"10\" fill=\"#1f4e9c\">{}</text>",
                    sx + UNIT - 3,
                    y + UNIT / 2 + 4,
                    right.apply(x)
                );
            }
            out.push_str("    </g>\n");
        }
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use fillpair_core::minimal_closed;

    fn labels(svg: &str, suffix: &str) -> Vec<String> {
        svg.lines()
            .filter(|l| l.contains(&format!("-{suffix}\"")))
            .map(|l| {
                let start = l.find('>').unwrap() + 1;
                let end = l.rfind("</text>").unwrap();
                l[start..end].to_string()
            })
            .collect()
    }

    #[test]
    fn seed_strip_labels() {
        let svg = render(&CurvePair::torus_seed(3).unwrap(), Style::Strip).unwrap();
        assert_eq!(labels(&svg, "top"), ["1", "2", "3"]);
        assert_eq!(labels(&svg, "bottom"), ["3", "1", "2"]);
    }

    #[test]
    fn genus_three_tiling_is_one_row_of_five() {
        let svg = render(&minimal_closed(3).unwrap(), Style::Tiling).unwrap();
        assert_eq!(svg.matches("<rect x=").count(), 5);
        assert_eq!(svg.matches("<g id=\"row-").count(), 1);
    }

    #[test]
    fn output_is_stable() {
        let pair = minimal_closed(6).unwrap();
        for style in [Style::Strip, Style::Tiling] {
            assert_eq!(render(&pair, style).unwrap(), render(&pair, style).unwrap());
        }
    }
}
