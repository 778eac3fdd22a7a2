//! Regions between two paths, the tiles that may cover them, and the
//! cover-inclusive / cover-exclusive tilings with their statistics.
//!
//! Coordinates: path vertices sit at `(i, height(i))`; a unit cell is named by
//! its center `(x, y)` with `x + y` odd. A type-D two-by-two tile centered at
//! `(L, m)` is named by its west cell `(L-1, m)`; it counts as one cell. In type
//! B the anchors are the cells of the last column `x = L`.

mod enumerate;
mod project;
pub mod svg;

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pathword::PathWord;

pub use enumerate::{
    enumerate_tilings, genfun_lower, genfun_pair, genfun_upper, signed_exclusive_weight,
    tilings_above, Class, Statistic,
};
pub use project::{lift_from_type_b, project_to_type_b};

pub type Cell = (i32, i32);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum PathType {
    A,
    B,
    D,
}

impl fmt::Display for PathType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PathType::A => "A",
            PathType::B => "B",
            PathType::D => "D",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Region {
    pub path_type: PathType,
    pub lower: PathWord,
    pub upper: PathWord,
    /// Cell centers sorted by `(x, y)`; two-by-two tiles appear as their west cell.
    pub cells: Vec<Cell>,
    /// Two-by-two west cells (type D) or anchors (type B).
    pub special: BTreeSet<Cell>,
    #[serde(skip)]
    lower_heights: Vec<i32>,
}

impl Region {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }

    pub fn index(&self, c: Cell) -> Option<usize> {
        self.cells.binary_search(&c).ok()
    }

    pub fn is_special(&self, c: Cell) -> bool {
        self.special.contains(&c)
    }

    /// Path length `L` (the lower and upper words share it).
    pub fn word_len(&self) -> usize {
        self.lower.len()
    }

    pub fn lower_height(&self, x: i32) -> Option<i32> {
        usize::try_from(x).ok().and_then(|i| self.lower_heights.get(i).copied())
    }

    /// Centers `(L, m)` of the two-by-two tiles of a type-D region.
    pub fn two_by_two_centers(&self) -> Vec<Cell> {
        match self.path_type {
            PathType::D => self.special.iter().map(|&(x, y)| (x + 1, y)).collect(),
            _ => Vec::new(),
        }
    }

    /// First column past the cells that the cover-exclusive neighbour test
    /// looks at.
    fn terminal(&self) -> i32 {
        match self.path_type {
            PathType::B => self.word_len() as i32 + 1,
            _ => self.word_len() as i32,
        }
    }
}

/// The cells of `R_X(lam, mu)`.
pub fn build_region(lam: &PathWord, mu: &PathWord, path_type: PathType) -> Result<Region> {
    if !mu.is_above(lam)? {
        return Err(Error::OrderViolation {
            lower: lam.to_string(),
            upper: mu.to_string(),
        });
    }
    match path_type {
        PathType::D if lam.epsilon() != mu.epsilon() => {
            return Err(Error::SignMismatch {
                lower: lam.to_string(),
                upper: mu.to_string(),
                eps_lower: lam.epsilon(),
                eps_upper: mu.epsilon(),
            })
        }
        PathType::A => {
            for w in [lam, mu] {
                if !w.is_dyck() {
                    return Err(Error::NotDyck(w.to_string()));
                }
            }
        }
        _ => {}
    }
    let l = lam.len() as i32;
    let hl = lam.heights();
    let hm = mu.heights();
    let last_x = match path_type {
        PathType::B => l,
        _ => l - 1,
    };
    let mut cells = Vec::new();
    for x in 1..=last_x {
        let (lo, hi) = (hl[x as usize], hm[x as usize]);
        for y in lo + 1..hi {
            if (x + y).rem_euclid(2) == 1 {
                cells.push((x, y));
            }
        }
    }
    cells.sort();
    let special: BTreeSet<Cell> = match path_type {
        PathType::A => BTreeSet::new(),
        PathType::B => cells.iter().copied().filter(|c| c.0 == l).collect(),
        PathType::D => {
            let r = l + 2 * lam.epsilon() as i32 + 2;
            cells
                .iter()
                .copied()
                .filter(|&(x, y)| x == l - 1 && (y - r).rem_euclid(4) == 0)
                .collect()
        }
    };
    Ok(Region {
        path_type,
        lower: lam.clone(),
        upper: mu.clone(),
        cells,
        special,
        lower_heights: hl,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum TileKind {
    Dyck,
    BallotB,
    TwoByTwo,
    DyckD,
    BallotD,
}

impl TileKind {
    pub fn is_ballot(self) -> bool {
        matches!(self, TileKind::BallotB | TileKind::BallotD)
    }
}

/// One tile. Ballot tiles also record their Dyck stem and lower tail, which
/// the cover-inclusive test checks separately.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Tile {
    pub kind: TileKind,
    pub cells: Vec<Cell>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub stem: Vec<Cell>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub lower_tail: Vec<Cell>,
}

impl Tile {
    fn new(kind: TileKind, mut cells: Vec<Cell>) -> Self {
        cells.sort();
        Tile {
            kind,
            cells,
            stem: Vec::new(),
            lower_tail: Vec::new(),
        }
    }

    /// Cell count, a two-by-two counting once.
    pub fn area(&self) -> usize {
        self.cells.len()
    }

    pub fn art(&self) -> usize {
        self.area().div_ceil(2)
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }
}

/// Rightward ribbons starting at `start` (every prefix, including `[start]`).
fn ribbons_from(region: &Region, start: Cell) -> Vec<Vec<Cell>> {
    let mut out = Vec::new();
    let mut stack = vec![vec![start]];
    while let Some(r) = stack.pop() {
        let (x, y) = *r.last().unwrap();
        for dy in [1, -1] {
            let c = (x + 1, y + dy);
            if region.contains(c) {
                let mut nr = r.clone();
                nr.push(c);
                stack.push(nr);
            }
        }
        out.push(r);
    }
    out
}

fn is_dyck_ribbon(r: &[Cell]) -> bool {
    let y0 = r[0].1;
    r.last().unwrap().1 == y0 && r.iter().all(|c| c.1 >= y0)
}

/// Dyck ribbons of non-special cells that end at `g` and never dip below it.
fn stems_to(region: &Region, g: Cell) -> Vec<Vec<Cell>> {
    let mut out = Vec::new();
    let mut stack = vec![vec![g]];
    while let Some(r) = stack.pop() {
        let (x, y) = *r.last().unwrap();
        if y == g.1 {
            out.push(r.iter().rev().copied().collect());
        }
        for dy in [1, -1] {
            let c = (x - 1, y + dy);
            if c.1 >= g.1 && region.contains(c) && !region.is_special(c) {
                let mut nr = r.clone();
                nr.push(c);
                stack.push(nr);
            }
        }
    }
    out
}

/// Ballot tiles: a Dyck stem ending at a glue cell `g`, an upper tail from
/// `g + (1, 1)` to the last column, and a copy of it shifted down two rows.
/// The tails end on two vertically adjacent last-column cells, at least one
/// of them special. The upper tail rises by an odd amount and never dips
/// below its start.
fn ballot_tiles(region: &Region, kind: TileKind) -> Vec<Tile> {
    let last_x = match region.path_type {
        PathType::B => region.word_len() as i32,
        _ => region.word_len() as i32 - 1,
    };
    let mut out = Vec::new();
    for &up_end in region.cells.iter().filter(|c| c.0 == last_x) {
        let lo_end = (up_end.0, up_end.1 - 2);
        if !region.contains(lo_end) || !(region.is_special(up_end) || region.is_special(lo_end)) {
            continue;
        }
        let mut stack = vec![vec![up_end]];
        while let Some(r) = stack.pop() {
            let upper: Vec<Cell> = r.iter().rev().copied().collect();
            let lower: Vec<Cell> = upper.iter().map(|&(x, y)| (x, y - 2)).collect();
            let inner_special = upper[..upper.len() - 1]
                .iter()
                .chain(&lower[..lower.len() - 1])
                .any(|&c| region.is_special(c));
            if lower.iter().all(|&c| region.contains(c)) && !inner_special {
                let s = upper[0].1;
                let rise = upper.last().unwrap().1 - s;
                if upper.iter().all(|c| c.1 >= s) && rise > 0 && rise % 2 == 1 {
                    let g = (upper[0].0 - 1, s - 1);
                    if region.contains(g) && !region.is_special(g) {
                        for stem in stems_to(region, g) {
                            let mut cells: Vec<Cell> = stem.clone();
                            cells.extend(&upper);
                            cells.extend(&lower);
                            let mut t = Tile::new(kind, cells);
                            t.stem = stem;
                            t.stem.sort();
                            t.lower_tail = lower.clone();
                            t.lower_tail.sort();
                            out.push(t);
                        }
                    }
                }
            }
            let (x, y) = *r.last().unwrap();
            for dy in [1, -1] {
                let c = (x - 1, y + dy);
                if region.contains(c) {
                    let mut nr = r.clone();
                    nr.push(c);
                    stack.push(nr);
                }
            }
        }
    }
    out
}

/// Every admissible tile of the region, sorted.
pub fn candidate_tiles(region: &Region) -> Vec<Tile> {
    let mut out = Vec::new();
    for &s in &region.cells {
        for r in ribbons_from(region, s) {
            if !is_dyck_ribbon(&r) {
                continue;
            }
            let ends_special = region.is_special(*r.last().unwrap());
            let kind = match region.path_type {
                PathType::D if ends_special && r.len() == 1 => TileKind::TwoByTwo,
                PathType::D if ends_special => TileKind::DyckD,
                _ => TileKind::Dyck,
            };
            out.push(Tile::new(kind, r));
        }
    }
    match region.path_type {
        PathType::A => {}
        PathType::B => out.extend(ballot_tiles(region, TileKind::BallotB)),
        PathType::D => out.extend(ballot_tiles(region, TileKind::BallotD)),
    }
    out.sort();
    out
}

/// A complete tiling of a region.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Tiling {
    pub tiles: Vec<Tile>,
    pub area: usize,
    pub tiles_count: usize,
    pub art: usize,
}

impl Tiling {
    pub fn new(mut tiles: Vec<Tile>) -> Self {
        tiles.sort();
        let area = tiles.iter().map(Tile::area).sum::<usize>();
        let tiles_count = tiles.len();
        Tiling {
            tiles,
            area,
            tiles_count,
            art: (area + tiles_count) / 2,
        }
    }

    pub fn statistic(&self, s: Statistic) -> usize {
        match s {
            Statistic::Art => self.art,
            Statistic::Tiles => self.tiles_count,
            Statistic::Area => self.area,
        }
    }

    /// Each region cell covered exactly once and nothing else covered.
    pub fn is_exact_cover(&self, region: &Region) -> bool {
        let mut seen = BTreeSet::new();
        for t in &self.tiles {
            for &c in &t.cells {
                if !region.contains(c) || !seen.insert(c) {
                    return false;
                }
            }
        }
        seen.len() == region.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> PathWord {
        s.parse().unwrap()
    }

    #[test]
    fn region_examples() {
        let r = build_region(&w("DUDU"), &w("UUDD"), PathType::D).unwrap();
        assert_eq!(r.cells, vec![(1, 0), (2, 1), (3, 0)]);
        assert!(r.special.is_empty());

        let r = build_region(&w("DDUU"), &w("UUUU"), PathType::D).unwrap();
        assert_eq!(r.cells, vec![(1, 0), (2, -1), (2, 1), (3, 0), (3, 2)]);
        assert_eq!(r.two_by_two_centers(), vec![(4, 2)]);

        let r = build_region(&w("UDUD"), &w("UDUD"), PathType::B).unwrap();
        assert!(r.is_empty());
    }

    #[test]
    fn region_errors() {
        assert!(matches!(
            build_region(&w("UUDD"), &w("UDUD"), PathType::D),
            Err(Error::OrderViolation { .. })
        ));
        assert!(matches!(
            build_region(&w("DDDU"), &w("UUUU"), PathType::D),
            Err(Error::SignMismatch { .. })
        ));
        assert!(matches!(
            build_region(&w("UUDD"), &w("UUUU"), PathType::A),
            Err(Error::NotDyck(_))
        ));
    }

    #[test]
    fn type_b_anchors_fill_the_last_column() {
        let r = build_region(&w("DDD"), &w("UUU"), PathType::B).unwrap();
        assert_eq!(
            r.special.iter().copied().collect::<Vec<_>>(),
            vec![(3, -2), (3, 0), (3, 2)]
        );
    }

    #[test]
    fn candidate_kinds() {
        let r = build_region(&w("DDUU"), &w("UUUU"), PathType::D).unwrap();
        let tiles = candidate_tiles(&r);
        assert!(tiles
            .iter()
            .any(|t| t.kind == TileKind::TwoByTwo && t.cells == vec![(3, 2)]));
        assert!(tiles.iter().any(|t| t.kind == TileKind::BallotD));
        assert!(tiles
            .iter()
            .all(|t| t.area() % 2 == 1 && t.cells.iter().all(|&c| r.contains(c))));
    }
}
