//! Independent combinatorial model of type A cluster categories: diagonals of
//! a convex polygon, crossings, triangulations and flips.
//!
//! This module is deliberately self-contained -- no Hom tables, no shared
//! arithmetic with the mesh side -- so it can serve as a brute-force oracle.

use crate::error::{CatError, Result};
use std::collections::BTreeSet;

/// A diagonal of a convex `m`-gon with vertices 0..m, stored with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagonal(pub usize, pub usize);

impl Diagonal {
    pub fn new(a: usize, b: usize) -> Diagonal {
        if a < b {
            Diagonal(a, b)
        } else {
            Diagonal(b, a)
        }
    }
}

/// Polygon size used to model the rank-`n` case.
pub fn polygon_size(n: usize) -> usize {
    n + 3
}

/// All diagonals of the (n+3)-gon; there are exactly n(n+3)/2 of them.
pub fn diagonals(n: usize) -> Vec<Diagonal> {
    let m = polygon_size(n);
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 2..m {
            if i == 0 && j == m - 1 {
                continue; // boundary edge, not a diagonal
            }
            out.push(Diagonal(i, j));
        }
    }
    out
}

/// Two diagonals cross iff their endpoints strictly interleave around the
/// polygon. Sharing an endpoint never counts.
pub fn crossing(d1: Diagonal, d2: Diagonal) -> bool {
    let Diagonal(a, b) = d1;
    let Diagonal(c, d) = d2;
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Rotate a diagonal one polygon step (the translation of the model).
pub fn rotate(m: usize, d: Diagonal, steps: i64) -> Diagonal {
    let m = m as i64;
    let shift = |v: usize| -> usize { (((v as i64 + steps) % m + m) % m) as usize };
    Diagonal::new(shift(d.0), shift(d.1))
}

/// Size of the rotation orbit of a diagonal in the m-gon (m or m/2).
pub fn rotation_orbit_size(m: usize, d: Diagonal) -> usize {
    if 2 * (d.1 - d.0) == m {
        m / 2
    } else {
        m
    }
}

/// All triangulations, i.e. maximal non-crossing sets of diagonals (size n).
pub fn enumerate_triangulations(n: usize) -> Vec<Vec<Diagonal>> {
    let all = diagonals(n);
    let mut out = Vec::new();
    let mut current: Vec<Diagonal> = Vec::new();
    fn extend(
        all: &[Diagonal],
        start: usize,
        current: &mut Vec<Diagonal>,
        n: usize,
        out: &mut Vec<Vec<Diagonal>>,
    ) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for k in start..all.len() {
            let d = all[k];
            if current.iter().all(|&c| !crossing(c, d)) {
                current.push(d);
                extend(all, k + 1, current, n, out);
                current.pop();
            }
        }
    }
    extend(&all, 0, &mut current, n, &mut out);
    out
}

/// Flip a diagonal of a triangulation: replace it by the unique other
/// diagonal of the quadrilateral it spans.
pub fn flip(n: usize, t: &[Diagonal], d: Diagonal) -> Result<Vec<Diagonal>> {
    if !t.contains(&d) {
        return Err(CatError::Oracle(format!(
            "diagonal {:?} is not part of the triangulation",
            d
        )));
    }
    let all = diagonals(n);
    let rest: Vec<Diagonal> = t.iter().copied().filter(|&x| x != d).collect();
    let mut candidates = all
        .into_iter()
        .filter(|&x| x != d && rest.iter().all(|&c| !crossing(c, x)) && crossing(x, d));
    let Some(new) = candidates.next() else {
        return Err(CatError::Oracle("no flip candidate (boundary edge?)".into()));
    };
    if candidates.next().is_some() {
        return Err(CatError::Oracle("flip candidate not unique".into()));
    }
    let mut out = rest;
    out.push(new);
    out.sort();
    Ok(out)
}

/// Outcome of matching a mesh-side category onto the polygon model: for each
/// object index, its diagonal.
#[derive(Clone, Debug)]
pub struct MeshMatch {
    pub n: usize,
    pub assignment: Vec<Diagonal>,
    /// Rotation direction that realised tau (+1 or -1 polygon steps).
    pub direction: i64,
}

/// Search for a bijection objects <-> diagonals under which the support of
/// `ext` equals the crossing relation and tau corresponds to rotation.
///
/// `tau[x]` is the translate of object x; `ext(x, y)` reports whether
/// Ext^1(x, y) vanishes or not on the mesh side. Objects are seeded per
/// tau-orbit and propagated by equivariance.
pub fn match_mesh(
    n: usize,
    tau: &[usize],
    ext: &dyn Fn(usize, usize) -> bool,
) -> Option<MeshMatch> {
    let count = tau.len();
    if count != n * (n + 3) / 2 {
        return None;
    }
    let m = polygon_size(n);
    // tau-orbits in deterministic order
    let mut orbit_of = vec![usize::MAX; count];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..count {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let mut orbit = Vec::new();
        let mut cur = start;
        while orbit_of[cur] == usize::MAX {
            orbit_of[cur] = orbits.len();
            orbit.push(cur);
            cur = tau[cur];
            if cur >= count {
                return None; // corrupted translation table
            }
        }
        if cur != start {
            return None; // tau is not a permutation made of cycles
        }
        orbits.push(orbit);
    }
    let all = diagonals(n);
    for direction in [-1i64, 1i64] {
        let mut assignment: Vec<Option<Diagonal>> = vec![None; count];
        let mut used: BTreeSet<Diagonal> = BTreeSet::new();
        if assign_orbits(
            m,
            direction,
            &orbits,
            0,
            &all,
            tau,
            ext,
            &mut assignment,
            &mut used,
        ) {
            return Some(MeshMatch {
                n,
                assignment: assignment.into_iter().map(|d| d.expect("complete")).collect(),
                direction,
            });
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn assign_orbits(
    m: usize,
    direction: i64,
    orbits: &[Vec<usize>],
    k: usize,
    all: &[Diagonal],
    tau: &[usize],
    ext: &dyn Fn(usize, usize) -> bool,
    assignment: &mut Vec<Option<Diagonal>>,
    used: &mut BTreeSet<Diagonal>,
) -> bool {
    if k == orbits.len() {
        return true;
    }
    let orbit = &orbits[k];
    for &seed in all {
        if used.contains(&seed) || rotation_orbit_size(m, seed) != orbit.len() {
            continue;
        }
        // propagate along the orbit: object tau(x) gets the rotated diagonal
        let mut local: Vec<(usize, Diagonal)> = Vec::with_capacity(orbit.len());
        let mut cur_obj = orbit[0];
        let mut cur_d = seed;
        for _ in 0..orbit.len() {
            local.push((cur_obj, cur_d));
            cur_obj = tau[cur_obj];
            cur_d = rotate(m, cur_d, direction);
        }
        let distinct: BTreeSet<Diagonal> = local.iter().map(|&(_, d)| d).collect();
        let mut ok = distinct.len() == local.len()
            && local.iter().all(|(_, d)| !used.contains(d));
        if ok {
            'outer: for &(x, dx) in &local {
                for (y, dy) in assignment
                    .iter()
                    .enumerate()
                    .filter_map(|(y, d)| d.map(|d| (y, d)))
                    .chain(local.iter().map(|&(y, d)| (y, d)))
                {
                    if ext(x, y) != crossing(dx, dy) || ext(y, x) != crossing(dy, dx) {
                        ok = false;
                        break 'outer;
                    }
                }
            }
        }
        if !ok {
            continue;
        }
        for &(x, d) in &local {
            assignment[x] = Some(d);
            used.insert(d);
        }
        if assign_orbits(m, direction, orbits, k + 1, all, tau, ext, assignment, used) {
            return true;
        }
        for &(x, d) in &local {
            assignment[x] = None;
            used.remove(&d);
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_counts() {
        assert_eq!(diagonals(3).len(), 9); // hexagon
        for n in 1..=8 {
            assert_eq!(diagonals(n).len(), n * (n + 3) / 2);
        }
    }

    #[test]
    fn crossing_basics() {
        assert!(crossing(Diagonal(0, 2), Diagonal(1, 3)));
        assert!(!crossing(Diagonal(0, 2), Diagonal(2, 4)));
        assert!(!crossing(Diagonal(0, 3), Diagonal(1, 3)));
    }

    #[test]
    fn triangulation_counts_are_catalan() {
        assert_eq!(enumerate_triangulations(2).len(), 5);
        assert_eq!(enumerate_triangulations(3).len(), 14);
        assert_eq!(enumerate_triangulations(4).len(), 42);
    }

    #[test]
    fn flip_is_an_involution() {
        for t in enumerate_triangulations(3) {
            for &d in &t {
                let t2 = flip(3, &t, d).unwrap();
                let new = *t2.iter().find(|x| !t.contains(x)).unwrap();
                let t3 = flip(3, &t2, new).unwrap();
                let mut sorted = t.clone();
                sorted.sort();
                assert_eq!(t3, sorted);
            }
        }
    }

    #[test]
    fn flip_requires_membership() {
        let ts = enumerate_triangulations(2);
        let t = ts
            .iter()
            .find(|t| !t.contains(&Diagonal(1, 4)))
            .expect("some pentagon triangulation avoids (1,4)");
        assert!(flip(2, t, Diagonal(1, 4)).is_err());
    }

    #[test]
    fn flip_graph_is_regular_and_connected() {
        let n = 4;
        let ts = enumerate_triangulations(n);
        let index: std::collections::BTreeMap<Vec<Diagonal>, usize> = ts
            .iter()
            .enumerate()
            .map(|(i, t)| {
                let mut s = t.clone();
                s.sort();
                (s, i)
            })
            .collect();
        let mut adj = vec![Vec::new(); ts.len()];
        for (i, t) in ts.iter().enumerate() {
            for &d in t {
                let f = flip(n, t, d).unwrap();
                adj[i].push(index[&f]);
            }
            assert_eq!(adj[i].len(), n); // n-regular
        }
        let mut seen = vec![false; ts.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        assert!(seen.into_iter().all(|b| b));
    }

    #[test]
    fn rotation_orbit_sizes() {
        // square: both diagonals have orbit size 2
        assert_eq!(rotation_orbit_size(4, Diagonal(0, 2)), 2);
        assert_eq!(rotation_orbit_size(6, Diagonal(0, 2)), 6);
        assert_eq!(rotation_orbit_size(6, Diagonal(0, 3)), 3);
    }
}
