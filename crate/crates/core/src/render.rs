//! ASCII and SVG drawings of domino tableaux. Rows are drawn top to bottom.

use std::fmt::Write;

use crate::domino::{DominoTableau, Orientation};

/// SVG cell size in user units.
pub const CELL: u32 = 40;
/// SVG domino border width.
pub const BORDER: u32 = 2;

/// `owner[r][c]` is the index of the domino covering cell `(r, c)` (0-based).
fn owners(t: &DominoTableau) -> Vec<Vec<usize>> {
    let mut owner: Vec<Vec<usize>> = t.shape().parts().iter().map(|&w| vec![0; w as usize]).collect();
    for (i, d) in t.dominoes().iter().enumerate() {
        for (r, c) in d.cells() {
            owner[r - 1][c - 1] = i;
        }
    }
    owner
}

/// Box drawing with `+`, `-` and `|`; each cell is four characters wide and
/// two lines tall, and the edge inside a domino is left open. Labels sit in
/// the middle of their domino. Trailing spaces are trimmed.
pub fn to_ascii(t: &DominoTableau) -> String {
    let owner = owners(t);
    let rows = owner.iter().take_while(|r| !r.is_empty()).count();
    if rows == 0 {
        return String::new();
    }
    let cols = owner[0].len();
    let mut canvas = vec![vec![' '; 4 * cols + 1]; 2 * rows + 1];
    let cell = |r: usize, c: usize| owner.get(r).and_then(|row| row.get(c)).copied();
    for r in 0..rows {
        for c in 0..owner[r].len() {
            let me = owner[r][c];
            let up = r == 0 || cell(r - 1, c) != Some(me);
            let down = cell(r + 1, c) != Some(me);
            let left = c == 0 || cell(r, c - 1) != Some(me);
            let right = cell(r, c + 1) != Some(me);
            if up {
                canvas[2 * r][4 * c + 1..4 * c + 4].fill('-');
            }
            if down {
                canvas[2 * r + 2][4 * c + 1..4 * c + 4].fill('-');
            }
            if left {
                canvas[2 * r + 1][4 * c] = '|';
            }
            if right {
                canvas[2 * r + 1][4 * c + 4] = '|';
            }
        }
    }
    for y in (0..canvas.len()).step_by(2) {
        for x in (0..canvas[y].len()).step_by(4) {
            let vertical = (y > 0 && canvas[y - 1][x] == '|')
                || canvas.get(y + 1).is_some_and(|l| l[x] == '|');
            let horizontal = (x > 0 && canvas[y][x - 1] == '-')
                || canvas[y].get(x + 1).is_some_and(|&ch| ch == '-');
            canvas[y][x] = match (vertical, horizontal) {
                (true, true) => '+',
                (true, false) => '|',
                (false, true) => '-',
                (false, false) => ' ',
            };
        }
    }
    for d in t.dominoes() {
        let (r, c) = (d.row - 1, d.col - 1);
        let (y, x0, width) = match d.orientation {
            Orientation::Horizontal => (2 * r + 1, 4 * c + 1, 7usize),
            Orientation::Vertical => (2 * r + 2, 4 * c + 1, 3),
        };
        let label = d.label.to_string();
        let start = x0 + width.saturating_sub(label.len()) / 2;
        for (k, ch) in label.chars().enumerate() {
            canvas[y][start + k] = ch;
        }
    }
    let mut out = String::new();
    for line in canvas {
        let s: String = line.into_iter().collect();
        out += s.trim_end();
        out.push('\n');
    }
    out
}

/// SVG 1.1 drawing: one outlined rectangle per domino followed by its
/// centered label, in the tableau's domino order.
pub fn to_svg(t: &DominoTableau) -> String {
    let parts = t.shape().parts();
    let rows = parts.iter().filter(|&&w| w > 0).count() as u32;
    let cols = parts.first().copied().unwrap_or(0);
    let (width, height) = (cols * CELL + 2 * BORDER, rows * CELL + 2 * BORDER);
    let mut out = String::new();
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    )
    .unwrap();
    for d in t.dominoes() {
        let (w, h) = match d.orientation {
            Orientation::Horizontal => (2 * CELL, CELL),
            Orientation::Vertical => (CELL, 2 * CELL),
        };
        let x = BORDER + (d.col as u32 - 1) * CELL;
        let y = BORDER + (d.row as u32 - 1) * CELL;
        writeln!(
            out,
            "  <rect x=\"{x}\" y=\"{y}\" width=\"{w}\" height=\"{h}\" fill=\"white\" stroke=\"black\" stroke-width=\"{BORDER}\"/>"
        )
        .unwrap();
        writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\" dominant-baseline=\"central\" font-family=\"sans-serif\" font-size=\"{}\">{}</text>",
            x + w / 2,
            y + h / 2,
            CELL / 2,
            d.label
        )
        .unwrap();
    }
    out += "</svg>\n";
    out
}
