//! Type D to type B and back.
//!
//! Deleting the last step of both paths keeps every cell in place: the west
//! cell of a two-by-two becomes a cell of the last type-B column, and every
//! pair of vertically adjacent cells in that column contains exactly one
//! two-by-two position. So tiles carry over one-to-one and only their kind
//! changes.

use super::{build_region, candidate_tiles, PathType, Region, Tile, TileKind, Tiling};
use crate::error::{Error, Result};
use crate::pathword::{PathWord, Step};

fn check_cover(region: &Region, tiling: &Tiling, from: PathType) -> Result<()> {
    if region.path_type != from {
        return Err(Error::MalformedTiling(format!(
            "expected a type-{from} region, got type {}",
            region.path_type
        )));
    }
    if !tiling.is_exact_cover(region) {
        return Err(Error::MalformedTiling("not an exact cover of the region".into()));
    }
    Ok(())
}

/// Relabel and confirm each tile is a candidate of the target region.
fn relabel(target: &Region, tiling: &Tiling, kind: impl Fn(&Tile) -> TileKind) -> Result<Tiling> {
    let allowed = candidate_tiles(target);
    let tiles = tiling
        .tiles
        .iter()
        .map(|t| {
            let mut nt = t.clone();
            nt.kind = kind(t);
            if allowed.binary_search(&nt).is_err() {
                return Err(Error::MalformedTiling(format!(
                    "tile {:?} has no counterpart in {} / {}",
                    t.cells, target.lower, target.upper
                )));
            }
            Ok(nt)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Tiling::new(tiles))
}

/// Image of a type-D tiling of `R_D(λ, μ)` in `R_B(λ̃, μ̃)`. Statistics are
/// preserved tile for tile.
pub fn project_to_type_b(region: &Region, tiling: &Tiling) -> Result<(Region, Tiling)> {
    check_cover(region, tiling, PathType::D)?;
    let target = build_region(
        &region.lower.truncate_last()?,
        &region.upper.truncate_last()?,
        PathType::B,
    )?;
    let out = relabel(&target, tiling, |t| match t.kind {
        TileKind::BallotD | TileKind::BallotB => TileKind::BallotB,
        _ => TileKind::Dyck,
    })?;
    Ok((target, out))
}

fn extend_to_sign(w: &PathWord, eps: u8) -> PathWord {
    let mut steps = w.steps().to_vec();
    steps.push(Step::U);
    let up = PathWord::new(steps.clone());
    if up.epsilon() == eps {
        return up;
    }
    *steps.last_mut().unwrap() = Step::D;
    PathWord::new(steps)
}

/// Inverse of [`project_to_type_b`]: both words get the final step that gives
/// them sign `eps`.
pub fn lift_from_type_b(region: &Region, tiling: &Tiling, eps: u8) -> Result<(Region, Tiling)> {
    check_cover(region, tiling, PathType::B)?;
    if eps > 1 {
        return Err(Error::Domain(format!("sign must be 0 or 1, got {eps}")));
    }
    let target = build_region(
        &extend_to_sign(&region.lower, eps),
        &extend_to_sign(&region.upper, eps),
        PathType::D,
    )?;
    let out = relabel(&target, tiling, |t| {
        let last = *t.cells.last().unwrap();
        match t.kind {
            TileKind::BallotB | TileKind::BallotD => TileKind::BallotD,
            _ if !target.is_special(last) => TileKind::Dyck,
            _ if t.area() == 1 => TileKind::TwoByTwo,
            _ => TileKind::DyckD,
        }
    })?;
    Ok((target, out))
}
