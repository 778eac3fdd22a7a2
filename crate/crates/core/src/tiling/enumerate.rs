use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use super::{build_region, candidate_tiles, Cell, PathType, Region, Tile, Tiling};
use crate::error::Result;
use crate::pathword::{all_words, PathWord};
use crate::qpoly::PolyQ;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Class {
    CoverInclusive,
    CoverExclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Statistic {
    Art,
    Tiles,
    Area,
}

type Mask = u128;

struct Indexed<'a> {
    region: &'a Region,
    tiles: Vec<Tile>,
    masks: Vec<Mask>,
    /// Candidates grouped by their smallest cell.
    by_min: Vec<Vec<usize>>,
}

impl<'a> Indexed<'a> {
    fn new(region: &'a Region) -> Self {
        assert!(region.len() <= 128, "region too large for the cell mask");
        let tiles = candidate_tiles(region);
        let mut by_min = vec![Vec::new(); region.len()];
        let masks: Vec<Mask> = tiles
            .iter()
            .enumerate()
            .map(|(k, t)| {
                let idx: Vec<usize> = t.cells.iter().map(|&c| region.index(c).unwrap()).collect();
                by_min[*idx.iter().min().unwrap()].push(k);
                idx.iter().fold(0, |m, &i| m | 1 << i)
            })
            .collect();
        Indexed {
            region,
            tiles,
            masks,
            by_min,
        }
    }

    /// All exact covers, as lists of candidate indices.
    fn exact_covers(&self) -> Vec<Vec<usize>> {
        let n = self.region.len();
        let full: Mask = if n == 128 { !0 } else { (1 << n) - 1 };
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        self.search(0, full, &mut chosen, &mut out);
        out
    }

    fn search(&self, covered: Mask, full: Mask, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if covered == full {
            out.push(chosen.clone());
            return;
        }
        let first = (!covered).trailing_zeros() as usize;
        for &k in &self.by_min[first] {
            if self.masks[k] & covered == 0 {
                chosen.push(k);
                self.search(covered | self.masks[k], full, chosen, out);
                chosen.pop();
            }
        }
    }
}

fn owners(tiles: &[&Tile]) -> HashMap<Cell, usize> {
    let mut m = HashMap::new();
    for (i, t) in tiles.iter().enumerate() {
        for &c in &t.cells {
            m.insert(c, i);
        }
    }
    m
}

/// Each tile, shifted down by two rows, must lie below λ or inside one
/// other tile at least as large. Ballot tiles are checked as two pieces,
/// the stem and the lower tail, each against its own size.
fn cover_inclusive_ok(region: &Region, tiles: &[&Tile]) -> bool {
    let owner = owners(tiles);
    let piece_ok = |i: usize, piece: &[Cell], size: usize| -> bool {
        let shifted: Vec<Cell> = piece.iter().map(|&(x, y)| (x, y - 2)).collect();
        let below = shifted
            .iter()
            .all(|&(x, y)| region.lower_height(x).is_some_and(|h| y < h));
        if below {
            return true;
        }
        let mut host = None;
        for c in &shifted {
            match (owner.get(c), host) {
                (None, _) => return false,
                (Some(&j), None) => host = Some(j),
                (Some(&j), Some(h)) if j != h => return false,
                _ => {}
            }
        }
        host.is_some_and(|j| j != i && tiles[j].area() >= size)
    };
    tiles.iter().enumerate().all(|(i, t)| {
        if t.kind.is_ballot() {
            piece_ok(i, &t.stem, t.stem.len()) && piece_ok(i, &t.lower_tail, t.lower_tail.len())
        } else {
            piece_ok(i, &t.cells, t.area())
        }
    })
}

/// If a tile `t1` touches a tile `t2` from above (just above, north-west or
/// north-east of one of its cells), then all such neighbours of `t2` inside
/// the terminal column must belong to `t1` or `t2`, and `t1` must hold a
/// two-by-two (anchor in type B) whenever `t2` does.
fn cover_exclusive_ok(region: &Region, tiles: &[&Tile]) -> bool {
    let owner = owners(tiles);
    let terminal = region.terminal();
    let nbrs = |(x, y): Cell| [(x, y + 2), (x - 1, y + 1), (x + 1, y + 1)];
    let special = |t: &Tile| t.cells.iter().any(|&c| region.is_special(c));
    for (j, t2) in tiles.iter().enumerate() {
        for (i, t1) in tiles.iter().enumerate() {
            if i == j {
                continue;
            }
            let touches = t2
                .cells
                .iter()
                .flat_map(|&c| nbrs(c))
                .any(|n| owner.get(&n) == Some(&i));
            if !touches {
                continue;
            }
            for n in t2.cells.iter().flat_map(|&c| nbrs(c)) {
                if n.0 >= terminal {
                    continue;
                }
                match owner.get(&n) {
                    Some(&k) if k == i || k == j => {}
                    _ => return false,
                }
            }
            if special(t2) && !special(t1) {
                return false;
            }
        }
    }
    true
}

/// All tilings of `region` in the given class, sorted.
pub fn enumerate_tilings(region: &Region, class: Class) -> Vec<Tiling> {
    let ix = Indexed::new(region);
    let mut out: Vec<Tiling> = ix
        .exact_covers()
        .into_iter()
        .filter_map(|ks| {
            let tiles: Vec<&Tile> = ks.iter().map(|&k| &ix.tiles[k]).collect();
            let ok = match class {
                Class::CoverInclusive => cover_inclusive_ok(region, &tiles),
                Class::CoverExclusive => cover_exclusive_ok(region, &tiles),
            };
            ok.then(|| Tiling::new(tiles.into_iter().cloned().collect()))
        })
        .collect();
    out.sort();
    out
}

/// `sum over tilings of q^stat`.
pub fn genfun_pair(
    lam: &PathWord,
    mu: &PathWord,
    path_type: PathType,
    class: Class,
    stat: Statistic,
) -> Result<PolyQ> {
    let region = build_region(lam, mu, path_type)?;
    let mut acc = PolyQ::zero();
    for t in enumerate_tilings(&region, class) {
        acc += &PolyQ::monomial(1, t.statistic(stat));
    }
    Ok(acc)
}

/// `(-1)^tiles q^stat` of the cover-exclusive tiling, or zero if none exists.
pub fn signed_exclusive_weight(
    lam: &PathWord,
    mu: &PathWord,
    path_type: PathType,
    stat: Statistic,
) -> Result<PolyQ> {
    let region = build_region(lam, mu, path_type)?;
    let mut acc = PolyQ::zero();
    for t in enumerate_tilings(&region, Class::CoverExclusive) {
        let sign = if t.tiles_count % 2 == 0 { 1 } else { -1 };
        acc += &PolyQ::monomial(sign, t.statistic(stat));
    }
    Ok(acc)
}

/// Words of the same length that may pair with `w` in a region of this type.
fn partners(w: &PathWord, path_type: PathType) -> Vec<PathWord> {
    all_words(w.len())
        .into_iter()
        .filter(|v| match path_type {
            PathType::A => v.is_dyck(),
            PathType::B => true,
            PathType::D => v.epsilon() == w.epsilon(),
        })
        .collect()
}

/// Every (μ, tiling) with μ above `lam`, μ in basis order.
pub fn tilings_above(lam: &PathWord, path_type: PathType, class: Class) -> Result<Vec<(PathWord, Tiling)>> {
    if path_type == PathType::A && !lam.is_dyck() {
        return Err(crate::error::Error::NotDyck(lam.to_string()));
    }
    let mus: Vec<PathWord> = partners(lam, path_type)
        .into_iter()
        .filter(|mu| mu.is_above(lam).unwrap_or(false))
        .collect();
    let per: Vec<Vec<(PathWord, Tiling)>> = mus
        .par_iter()
        .map(|mu| {
            let region = build_region(lam, mu, path_type).expect("partner is above");
            enumerate_tilings(&region, class)
                .into_iter()
                .map(|t| (mu.clone(), t))
                .collect()
        })
        .collect();
    Ok(per.into_iter().flatten().collect())
}

/// `P^X_λ`: cover-inclusive tilings over every admissible μ above λ.
pub fn genfun_lower(lam: &PathWord, path_type: PathType, stat: Statistic) -> Result<PolyQ> {
    let mut acc = PolyQ::zero();
    for (_, t) in tilings_above(lam, path_type, Class::CoverInclusive)? {
        acc += &PolyQ::monomial(1, t.statistic(stat));
    }
    Ok(acc)
}

/// `P~^X_μ`: cover-exclusive tilings over every admissible λ below μ.
pub fn genfun_upper(mu: &PathWord, path_type: PathType, stat: Statistic) -> Result<PolyQ> {
    if path_type == PathType::A && !mu.is_dyck() {
        return Err(crate::error::Error::NotDyck(mu.to_string()));
    }
    let lams: Vec<PathWord> = partners(mu, path_type)
        .into_iter()
        .filter(|lam| mu.is_above(lam).unwrap_or(false))
        .collect();
    let parts: Vec<PolyQ> = lams
        .par_iter()
        .map(|lam| genfun_pair(lam, mu, path_type, Class::CoverExclusive, stat).expect("below"))
        .collect();
    let mut acc = PolyQ::zero();
    for p in &parts {
        acc += p;
    }
    Ok(acc)
}
