//! SVG rendering of a single tiling.

use std::collections::HashMap;
use std::fmt::Write;

use super::{Cell, Region, Tiling};

const UNIT: i32 = 20;
const PAD: i32 = 20;
const PALETTE: [&str; 8] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5",
];

struct Frame {
    y_max: i32,
}

impl Frame {
    fn px(&self, (x, y): (i32, i32)) -> (i32, i32) {
        (PAD + x * UNIT, PAD + (self.y_max - y) * UNIT)
    }
}

fn corners((x, y): Cell) -> [(i32, i32); 4] {
    [(x - 1, y), (x, y + 1), (x + 1, y), (x, y - 1)]
}

fn polyline(frame: &Frame, heights: &[i32]) -> String {
    heights
        .iter()
        .enumerate()
        .map(|(i, &h)| {
            let (a, b) = frame.px((i as i32, h));
            format!("{a},{b}")
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Cells as diamonds filled per tile, tile boundaries in bold, both paths,
/// and an asterisk on every two-by-two or anchor cell.
pub fn render(region: &Region, tiling: &Tiling) -> String {
    let hl = region.lower.heights();
    let hm = region.upper.heights();
    let y_max = hm.iter().chain(&hl).copied().max().unwrap_or(0) + 1;
    let y_min = hm.iter().chain(&hl).copied().min().unwrap_or(0) - 1;
    let frame = Frame { y_max };
    let width = 2 * PAD + (region.word_len() as i32 + 1) * UNIT;
    let height = 2 * PAD + (y_max - y_min) * UNIT;

    let mut owner: HashMap<Cell, usize> = HashMap::new();
    for (i, t) in tiling.tiles.iter().enumerate() {
        for &c in &t.cells {
            owner.insert(c, i);
        }
    }

    let mut s = String::new();
    writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    for (i, t) in tiling.tiles.iter().enumerate() {
        let fill = PALETTE[i % PALETTE.len()];
        writeln!(s, r#"<g class="tile" data-kind="{:?}" fill="{fill}" stroke="none">"#, t.kind).unwrap();
        for &c in &t.cells {
            let pts: Vec<String> = corners(c)
                .iter()
                .map(|&p| {
                    let (a, b) = frame.px(p);
                    format!("{a},{b}")
                })
                .collect();
            writeln!(s, r#"<polygon points="{}"/>"#, pts.join(" ")).unwrap();
        }
        writeln!(s, "</g>").unwrap();
    }

    // Edges between different tiles, or between a tile and the outside.
    writeln!(s, r##"<g stroke="#000" stroke-width="2">"##).unwrap();
    for &c in &region.cells {
        let (x, y) = c;
        let me = owner.get(&c);
        let sides = [
            ((x - 1, y + 1), (x - 1, y), (x, y + 1)),
            ((x + 1, y + 1), (x, y + 1), (x + 1, y)),
            ((x + 1, y - 1), (x + 1, y), (x, y - 1)),
            ((x - 1, y - 1), (x, y - 1), (x - 1, y)),
        ];
        for (nb, a, b) in sides {
            if owner.get(&nb) != me {
                let (a0, a1) = frame.px(a);
                let (b0, b1) = frame.px(b);
                writeln!(s, r#"<line x1="{a0}" y1="{a1}" x2="{b0}" y2="{b1}"/>"#).unwrap();
            }
        }
    }
    writeln!(s, "</g>").unwrap();

    writeln!(
        s,
        r##"<polyline class="lower" fill="none" stroke="#1f4e9c" stroke-width="3" points="{}"/>"##,
        polyline(&frame, &hl)
    )
    .unwrap();
    writeln!(
        s,
        r##"<polyline class="upper" fill="none" stroke="#b22222" stroke-width="3" points="{}"/>"##,
        polyline(&frame, &hm)
    )
    .unwrap();

    for &c in &region.special {
        let (a, b) = frame.px(c);
        writeln!(
            s,
            r#"<text x="{a}" y="{}" font-size="{}" text-anchor="middle">*</text>"#,
            b + UNIT / 2,
            UNIT
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathword::PathWord;
    use crate::tiling::{build_region, enumerate_tilings, Class, PathType};

    #[test]
    fn renders_every_cell_and_the_asterisk() {
        let lam: PathWord = "DDUU".parse().unwrap();
        let mu: PathWord = "UUUU".parse().unwrap();
        let r = build_region(&lam, &mu, PathType::D).unwrap();
        let t = &enumerate_tilings(&r, Class::CoverInclusive)[0];
        let svg = render(&r, t);
        assert!(svg.starts_with("<svg"));
        assert!(svg.trim_end().ends_with("</svg>"));
        assert_eq!(svg.matches("<polygon").count(), r.len());
        assert_eq!(svg.matches(">*</text>").count(), 1);
        assert_eq!(svg, render(&r, t));
    }
}
