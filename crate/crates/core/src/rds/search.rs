use std::collections::BTreeSet;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::point::PlanePoint;
use super::set::RationalDistanceSet;
use crate::arith::{rational_square_root, QuadExt, Rational};
use crate::error::{Error, Result};

/// Parameters of the brute-force grid enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridSearch {
    pub k: u64,
    pub height_bound: u32,
    pub target_size: usize,
}

/// Enumerates the points `(a/c, (b/c) sqrt k)` with `|a|, |b|, c <= height`
/// and returns every maximal clique of size at least `target_size` of the
/// graph joining points at rational distance. Sets are sorted by
/// decreasing size, then by their (sorted) points.
pub fn grid_search_rational_sets(search: GridSearch) -> Result<Vec<RationalDistanceSet>> {
    let GridSearch { k, height_bound, target_size } = search;
    if height_bound < 1 {
        return Err(Error::domain("height bound must be at least 1"));
    }
    if target_size < 3 {
        return Err(Error::domain("target size must be at least 3"));
    }
    let h = height_bound as i64;
    let mut grid = BTreeSet::new();
    for c in 1..=h {
        for a in -h..=h {
            for b in -h..=h {
                grid.insert((Rational::new(a.into(), c.into()), Rational::new(b.into(), c.into())));
            }
        }
    }
    let grid: Vec<(Rational, Rational)> = grid.into_iter().collect();
    let kq = Rational::from_integer(BigInt::from(k));
    let adjacency: Vec<Vec<bool>> = grid
        .par_iter()
        .map(|(x1, r1)| {
            grid.iter()
                .map(|(x2, r2)| {
                    let dx = x1 - x2;
                    let dr = r1 - r2;
                    let d2 = &dx * &dx + &kq * &dr * &dr;
                    !num_traits::Zero::is_zero(&d2) && rational_square_root(&d2).is_some()
                })
                .collect()
        })
        .collect();

    let mut cliques = Vec::new();
    let all: Vec<usize> = (0..grid.len()).collect();
    bron_kerbosch(&adjacency, &mut Vec::new(), all, Vec::new(), target_size, &mut cliques);

    let mut sets = cliques
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            let points = c
                .iter()
                .map(|&i| {
                    let (x, r) = &grid[i];
                    PlanePoint::new(
                        QuadExt::rational(x.clone()),
                        QuadExt::new(Rational::from_integer(0.into()), r.clone(), k)?,
                    )
                })
                .collect::<Result<Vec<_>>>()?;
            RationalDistanceSet::verified(points, k)
        })
        .collect::<Result<Vec<_>>>()?;
    sets.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.points().cmp(b.points())));
    Ok(sets)
}

/// Bron-Kerbosch with pivoting; reports maximal cliques of size >= `min`.
fn bron_kerbosch(
    adj: &[Vec<bool>],
    r: &mut Vec<usize>,
    p: Vec<usize>,
    x: Vec<usize>,
    min: usize,
    out: &mut Vec<Vec<usize>>,
) {
    if p.is_empty() {
        if x.is_empty() && r.len() >= min {
            out.push(r.clone());
        }
        return;
    }
    if r.len() + p.len() < min {
        return;
    }
    let pivot = p
        .iter()
        .chain(&x)
        .copied()
        .max_by_key(|&u| p.iter().filter(|&&v| adj[u][v]).count())
        .unwrap();
    let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
    let mut p = p;
    let mut x = x;
    for v in candidates {
        let np = p.iter().copied().filter(|&u| adj[v][u]).collect();
        let nx = x.iter().copied().filter(|&u| adj[v][u]).collect();
        r.push(v);
        bron_kerbosch(adj, r, np, nx, min, out);
        r.pop();
        p.retain(|&u| u != v);
        x.push(v);
    }
}
