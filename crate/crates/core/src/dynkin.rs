//! Dynkin diagrams, their orientations, and the Euler form of a quiver.

use crate::error::{CatError, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum DynkinFamily {
    A,
    D,
    E,
}

impl std::fmt::Display for DynkinFamily {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DynkinFamily::A => write!(f, "A"),
            DynkinFamily::D => write!(f, "D"),
            DynkinFamily::E => write!(f, "E"),
        }
    }
}

/// A Dynkin diagram with a chosen orientation of its edges.
///
/// Vertices are 1-based. Families D and E are accepted only behind the
/// experimental flag; type A is the fully supported lane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DynkinSpec {
    pub family: DynkinFamily,
    pub rank: usize,
    /// Arrows `(source, target)`, one per diagram edge.
    pub orientation: Vec<(usize, usize)>,
}

impl DynkinSpec {
    pub fn new(
        family: DynkinFamily,
        rank: usize,
        orientation: Vec<(usize, usize)>,
        experimental: bool,
    ) -> Result<Self> {
        match family {
            DynkinFamily::A if rank >= 1 => {}
            DynkinFamily::D if rank >= 4 => {}
            DynkinFamily::E if (6..=8).contains(&rank) => {}
            _ => {
                return Err(CatError::Dynkin(format!(
                    "no Dynkin diagram {}{}",
                    family, rank
                )))
            }
        }
        if family != DynkinFamily::A && !experimental {
            return Err(CatError::Dynkin(format!(
                "family {} requires the experimental flag",
                family
            )));
        }
        let expected: BTreeSet<(usize, usize)> = Self::diagram_edges(family, rank)
            .into_iter()
            .collect();
        let got: BTreeSet<(usize, usize)> = orientation
            .iter()
            .map(|&(s, t)| if s < t { (s, t) } else { (t, s) })
            .collect();
        if got != expected || orientation.len() != expected.len() {
            return Err(CatError::Dynkin(format!(
                "orientation does not cover the edges of {}{} exactly",
                family, rank
            )));
        }
        for &(s, t) in &orientation {
            if s == t || s == 0 || t == 0 || s > rank || t > rank {
                return Err(CatError::Dynkin(format!("bad arrow {}>{}", s, t)));
            }
        }
        // Trees admit no oriented cycles, so acyclicity is automatic here.
        Ok(DynkinSpec { family, rank, orientation })
    }

    /// Linear orientation 1 -> 2 -> ... -> n, the canonical type A input.
    pub fn type_a_linear(rank: usize) -> Self {
        let orientation = (1..rank).map(|i| (i, i + 1)).collect();
        DynkinSpec::new(DynkinFamily::A, rank, orientation, false)
            .expect("linear A_n is always valid")
    }

    /// Undirected edges of the diagram, as sorted pairs.
    ///
    /// Conventions: A_n is the path 1-2-...-n. D_n is the path 1-...-(n-1)
    /// with the extra edge (n-2)-n. E_n is the path over 1,3,4,...,n with
    /// vertex 2 attached to 4 (Bourbaki numbering).
    pub fn diagram_edges(family: DynkinFamily, rank: usize) -> Vec<(usize, usize)> {
        match family {
            DynkinFamily::A => (1..rank).map(|i| (i, i + 1)).collect(),
            DynkinFamily::D => {
                let mut e: Vec<(usize, usize)> = (1..rank - 1).map(|i| (i, i + 1)).collect();
                e.push((rank - 2, rank));
                e
            }
            DynkinFamily::E => {
                let chain: Vec<usize> = std::iter::once(1).chain(3..=rank).collect();
                let mut e: Vec<(usize, usize)> =
                    chain.windows(2).map(|w| (w[0], w[1])).collect();
                e.push((2, 4));
                e.sort();
                e
            }
        }
    }

    /// Parse `"1>2,2>3"` into arrows.
    pub fn parse_orientation(text: &str) -> Result<Vec<(usize, usize)>> {
        let mut arrows = Vec::new();
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (s, t) = part
                .split_once('>')
                .ok_or_else(|| CatError::Parse(format!("expected `a>b`, got `{}`", part)))?;
            let s: usize = s
                .trim()
                .parse()
                .map_err(|_| CatError::Parse(format!("bad vertex `{}`", s)))?;
            let t: usize = t
                .trim()
                .parse()
                .map_err(|_| CatError::Parse(format!("bad vertex `{}`", t)))?;
            arrows.push((s, t));
        }
        Ok(arrows)
    }

    /// Number of positive roots of the root system.
    pub fn positive_root_count(&self) -> usize {
        match self.family {
            DynkinFamily::A => self.rank * (self.rank + 1) / 2,
            DynkinFamily::D => self.rank * (self.rank - 1),
            DynkinFamily::E => match self.rank {
                6 => 36,
                7 => 63,
                _ => 120,
            },
        }
    }

    /// Arrows out of / into each vertex (1-based lookup helpers).
    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.orientation.iter().filter(move |a| a.0 == v).map(|a| a.1)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.orientation.iter().filter(move |a| a.1 == v).map(|a| a.0)
    }

    /// Euler form <a, b> = sum a_i b_i - sum over arrows i->j of a_i b_j.
    pub fn euler_form(&self, a: &[i64], b: &[i64]) -> i64 {
        let diag: i64 = (0..self.rank).map(|i| a[i] * b[i]).sum();
        let off: i64 = self
            .orientation
            .iter()
            .map(|&(s, t)| a[s - 1] * b[t - 1])
            .sum();
        diag - off
    }

    /// Recognize a quiver given by explicit vertex/arrow lists as an oriented
    /// Dynkin diagram, relabelling vertices canonically.
    pub fn from_named_arrows(
        vertices: &[String],
        arrows: &[(String, String)],
        experimental: bool,
    ) -> Result<Self> {
        let n = vertices.len();
        if n == 0 {
            return Err(CatError::Dynkin("empty quiver".into()));
        }
        let index: BTreeMap<&str, usize> = vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.as_str(), i))
            .collect();
        if index.len() != n {
            return Err(CatError::Dynkin("duplicate vertex names".into()));
        }
        let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
        let mut directed = Vec::new();
        for (s, t) in arrows {
            let (&si, &ti) = match (index.get(s.as_str()), index.get(t.as_str())) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(CatError::Dynkin(format!("arrow {}->{} has unknown vertex", s, t))),
            };
            let fresh = si != ti && adj[si].insert(ti) && adj[ti].insert(si);
            if !fresh {
                return Err(CatError::Dynkin(
                    "loops or multiple edges are not Dynkin".into(),
                ));
            }
            directed.push((si, ti));
        }
        if directed.len() != n.saturating_sub(1) {
            return Err(CatError::Dynkin(
                "vertex/arrow counts do not form a tree; knitting would not terminate".into(),
            ));
        }
        // Classify the tree by its branch vertices.
        let degrees: Vec<usize> = adj.iter().map(|s| s.len()).collect();
        if degrees.iter().any(|&d| d > 3) || degrees.iter().filter(|&&d| d == 3).count() > 1 {
            return Err(CatError::Dynkin(
                "underlying tree is not of shape A, D or E".into(),
            ));
        }
        let relabel: Vec<usize>; // relabel[old] = new 1-based number
        let family;
        if let Some(branch) = degrees.iter().position(|&d| d == 3) {
            // Arm lengths from the branch vertex.
            let mut arms: Vec<Vec<usize>> = adj[branch]
                .iter()
                .map(|&first| {
                    let mut arm = vec![first];
                    let mut prev = branch;
                    let mut cur = first;
                    while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                        prev = cur;
                        cur = next;
                        arm.push(cur);
                    }
                    arm
                })
                .collect();
            arms.sort_by_key(|a| a.len());
            let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
            let mut map = vec![0usize; n];
            match lens.as_slice() {
                [1, 1, _] => {
                    family = DynkinFamily::D;
                    // long arm = 1..n-3, branch = n-2, short tips = n-1, n
                    let long = &arms[2];
                    for (k, &v) in long.iter().rev().enumerate() {
                        map[v] = k + 1;
                    }
                    map[branch] = n - 2;
                    map[arms[0][0]] = n - 1;
                    map[arms[1][0]] = n;
                }
                [1, 2, l] if (2..=4).contains(l) => {
                    family = DynkinFamily::E;
                    // branch = 4, short tip = 2, middle arm = 3 then 1,
                    // long arm = 5..n
                    map[branch] = 4;
                    map[arms[0][0]] = 2;
                    map[arms[1][0]] = 3;
                    map[arms[1][1]] = 1;
                    for (k, &v) in arms[2].iter().enumerate() {
                        map[v] = 5 + k;
                    }
                }
                _ => {
                    return Err(CatError::Dynkin(
                        "branch arm lengths are not of Dynkin D/E shape".into(),
                    ))
                }
            }
            relabel = map;
        } else {
            family = DynkinFamily::A;
            // A path; number from the lexicographically smaller endpoint.
            let mut map = vec![0usize; n];
            if n == 1 {
                map[0] = 1;
            } else {
                let ends: Vec<usize> = degrees
                    .iter()
                    .enumerate()
                    .filter(|(_, &d)| d == 1)
                    .map(|(i, _)| i)
                    .collect();
                if ends.len() != 2 {
                    return Err(CatError::Dynkin("path recognition failed".into()));
                }
                let start = *ends
                    .iter()
                    .min_by_key(|&&i| vertices[i].as_str())
                    .expect("two endpoints");
                let mut prev = usize::MAX;
                let mut cur = start;
                for k in 1..=n {
                    map[cur] = k;
                    let next = adj[cur].iter().find(|&&x| x != prev).copied();
                    prev = cur;
                    match next {
                        Some(nx) => cur = nx,
                        None => break,
                    }
                }
            }
            relabel = map;
        }
        let orientation: Vec<(usize, usize)> = directed
            .iter()
            .map(|&(s, t)| (relabel[s], relabel[t]))
            .collect();
        DynkinSpec::new(family, n, orientation, experimental)
    }
}

/// Parse the plain-text quiver format: lines `vertex <name>` and
/// `arrow <src> <dst>`; `#` starts a comment.
pub fn parse_quiver_file(text: &str) -> Result<(Vec<String>, Vec<(String, String)>)> {
    let mut vertices = Vec::new();
    let mut arrows = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut words = line.split_whitespace();
        match words.next() {
            Some("vertex") => {
                let name = words
                    .next()
                    .ok_or_else(|| CatError::Parse(format!("line {}: vertex needs a name", lineno + 1)))?;
                if words.next().is_some() {
                    return Err(CatError::Parse(format!("line {}: trailing tokens", lineno + 1)));
                }
                vertices.push(name.to_string());
            }
            Some("arrow") => {
                let s = words
                    .next()
                    .ok_or_else(|| CatError::Parse(format!("line {}: arrow needs src dst", lineno + 1)))?;
                let t = words
                    .next()
                    .ok_or_else(|| CatError::Parse(format!("line {}: arrow needs src dst", lineno + 1)))?;
                if words.next().is_some() {
                    return Err(CatError::Parse(format!("line {}: trailing tokens", lineno + 1)));
                }
                arrows.push((s.to_string(), t.to_string()));
            }
            Some(other) => {
                return Err(CatError::Parse(format!(
                    "line {}: unknown directive `{}`",
                    lineno + 1,
                    other
                )))
            }
            None => {}
        }
    }
    Ok((vertices, arrows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_a3() {
        let q = DynkinSpec::type_a_linear(3);
        assert_eq!(q.orientation, vec![(1, 2), (2, 3)]);
        assert_eq!(q.positive_root_count(), 6);
    }

    #[test]
    fn orientation_must_cover_edges() {
        assert!(DynkinSpec::new(DynkinFamily::A, 3, vec![(1, 2)], false).is_err());
        assert!(DynkinSpec::new(DynkinFamily::A, 3, vec![(1, 2), (3, 2)], false).is_ok());
        assert!(DynkinSpec::new(DynkinFamily::A, 3, vec![(1, 2), (1, 3)], false).is_err());
    }

    #[test]
    fn d_and_e_need_experimental() {
        let d4 = DynkinSpec::diagram_edges(DynkinFamily::D, 4);
        assert_eq!(d4, vec![(1, 2), (2, 3), (2, 4)]);
        assert!(DynkinSpec::new(DynkinFamily::D, 4, d4.clone(), false).is_err());
        assert!(DynkinSpec::new(DynkinFamily::D, 4, d4, true).is_ok());
        let e6 = DynkinSpec::diagram_edges(DynkinFamily::E, 6);
        assert_eq!(e6.len(), 5);
        assert!(DynkinSpec::new(DynkinFamily::E, 6, e6, true).is_ok());
    }

    #[test]
    fn parse_orientation_shorthand() {
        assert_eq!(
            DynkinSpec::parse_orientation("1>2, 2>3").unwrap(),
            vec![(1, 2), (2, 3)]
        );
        assert!(DynkinSpec::parse_orientation("1-2").is_err());
    }

    #[test]
    fn euler_form_linear_a2() {
        let q = DynkinSpec::type_a_linear(2);
        // <e1, e2> = -1 along the arrow, <e2, e1> = 0 against it.
        assert_eq!(q.euler_form(&[1, 0], &[0, 1]), -1);
        assert_eq!(q.euler_form(&[0, 1], &[1, 0]), 0);
        assert_eq!(q.euler_form(&[1, 1], &[1, 1]), 1);
    }

    #[test]
    fn recognize_path_from_file() {
        let (v, a) = parse_quiver_file("vertex x\nvertex y\nvertex z\narrow y x\narrow y z\n").unwrap();
        let spec = DynkinSpec::from_named_arrows(&v, &a, false).unwrap();
        assert_eq!(spec.family, DynkinFamily::A);
        assert_eq!(spec.rank, 3);
        // source in the middle regardless of numbering direction
        let sources: Vec<usize> = (1..=3)
            .filter(|&i| spec.arrows_from(i).count() == 2)
            .collect();
        assert_eq!(sources, vec![2]);
    }

    #[test]
    fn reject_cyclic_file() {
        let (v, a) =
            parse_quiver_file("vertex a\nvertex b\nvertex c\narrow a b\narrow b c\narrow c a\n")
                .unwrap();
        assert!(DynkinSpec::from_named_arrows(&v, &a, false).is_err());
    }
}
