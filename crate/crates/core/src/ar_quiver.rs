//! Knitting of Auslander-Reiten quivers and the stable translation quiver of
//! the cluster category.
//!
//! The module-category fragment is knitted slice by slice from the projective
//! dimension vectors; the cluster quiver extends that fragment by one more
//! co-translation round (producing the shifted projectives) and closes the
//! translation up with the glue rule tau(P_i) = P_i[1], tau(P_i[1]) = I_i.

use crate::dynkin::{DynkinFamily, DynkinSpec};
use crate::error::{CatError, Result};
use std::collections::BTreeMap;

/// Index of an object inside one translation quiver.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjId(pub usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ObjKind {
    Module,
    ShiftedProjective,
}

#[derive(Clone, Debug)]
pub struct CatObject {
    pub id: ObjId,
    pub kind: ObjKind,
    /// Canonical name: top-to-socle rendering for uniserial type A modules,
    /// raw dimension vector otherwise, `P<i>[1]` for shifted projectives.
    pub label: String,
    /// Dimension vector over the quiver vertices; `None` for shifted
    /// projectives.
    pub dimvec: Option<Vec<usize>>,
    /// `Some(i)` when the object is the projective P_i or its shift P_i[1].
    pub proj_index: Option<usize>,
    /// `Some(i)` when the object is the injective I_i.
    pub inj_index: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub src: ObjId,
    pub dst: ObjId,
}

/// A finite translation quiver: the AR-quiver of mod H (partial translation)
/// or of the cluster category (stable).
#[derive(Clone, Debug)]
pub struct TranslationQuiver {
    pub spec: DynkinSpec,
    pub objects: Vec<CatObject>,
    pub arrows: Vec<Arrow>,
    /// tau and its inverse, `None` where undefined.
    pub tau: Vec<Option<ObjId>>,
    pub tau_inv: Vec<Option<ObjId>>,
    /// Marked slices: projectives, injectives, shifted projectives (by
    /// Dynkin vertex, index 0 holds P_1 / I_1 / P_1[1]).
    pub projectives: Vec<ObjId>,
    pub injectives: Vec<ObjId>,
    pub shifted: Vec<ObjId>,
    pub stable: bool,
    arrows_out: Vec<Vec<usize>>,
    arrows_in: Vec<Vec<usize>>,
}

impl TranslationQuiver {
    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn object(&self, x: ObjId) -> &CatObject {
        &self.objects[x.0]
    }

    pub fn label(&self, x: ObjId) -> &str {
        &self.objects[x.0].label
    }

    pub fn by_label(&self, label: &str) -> Result<ObjId> {
        self.objects
            .iter()
            .position(|o| o.label == label)
            .map(ObjId)
            .ok_or_else(|| CatError::UnknownLabel(label.to_string()))
    }

    pub fn tau_of(&self, x: ObjId) -> Option<ObjId> {
        self.tau[x.0]
    }

    pub fn tau_inv_of(&self, x: ObjId) -> Option<ObjId> {
        self.tau_inv[x.0]
    }

    /// Arrow ids leaving `x`.
    pub fn out_arrows(&self, x: ObjId) -> &[usize] {
        &self.arrows_out[x.0]
    }

    pub fn in_arrows(&self, x: ObjId) -> &[usize] {
        &self.arrows_in[x.0]
    }

    pub fn out_neighbors(&self, x: ObjId) -> impl Iterator<Item = ObjId> + '_ {
        self.arrows_out[x.0].iter().map(move |&a| self.arrows[a].dst)
    }

    pub fn in_neighbors(&self, x: ObjId) -> impl Iterator<Item = ObjId> + '_ {
        self.arrows_in[x.0].iter().map(move |&a| self.arrows[a].src)
    }

    /// Arrows grouped with multiplicities (source, target, count).
    pub fn arrow_multiplicities(&self) -> Vec<(ObjId, ObjId, usize)> {
        let mut counts: BTreeMap<(ObjId, ObjId), usize> = BTreeMap::new();
        for a in &self.arrows {
            *counts.entry((a.src, a.dst)).or_insert(0) += 1;
        }
        counts.into_iter().map(|((s, t), m)| (s, t, m)).collect()
    }

    /// The unique arrow from `s` to `t`, if any (errors on multiplicity > 1).
    pub fn arrow_between(&self, s: ObjId, t: ObjId) -> Result<Option<usize>> {
        let mut found = None;
        for &a in &self.arrows_out[s.0] {
            if self.arrows[a].dst == t {
                if found.is_some() {
                    return Err(CatError::MeshSymmetry(format!(
                        "multiple arrows {} -> {}",
                        self.label(s),
                        self.label(t)
                    )));
                }
                found = Some(a);
            }
        }
        Ok(found)
    }

    /// tau^k on a stable quiver (k may be negative or zero).
    pub fn shift(&self, x: ObjId, k: i64) -> Result<ObjId> {
        if !self.stable {
            return Err(CatError::MeshSymmetry(
                "shift requires a stable translation quiver".into(),
            ));
        }
        let mut cur = x;
        for _ in 0..k.unsigned_abs() {
            cur = if k > 0 {
                self.tau[cur.0].expect("stable tau is total")
            } else {
                self.tau_inv[cur.0].expect("stable tau is total")
            };
        }
        Ok(cur)
    }

    /// Cycle decomposition of tau (stable quivers).
    pub fn tau_cycles(&self) -> Vec<Vec<ObjId>> {
        let mut seen = vec![false; self.objects.len()];
        let mut cycles = Vec::new();
        for start in 0..self.objects.len() {
            if seen[start] || self.tau[start].is_none() {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = ObjId(start);
            loop {
                if seen[cur.0] {
                    break;
                }
                seen[cur.0] = true;
                cycle.push(cur);
                match self.tau[cur.0] {
                    Some(next) => cur = next,
                    None => break,
                }
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Mesh symmetry: for every z with tau z defined, arrows y -> z biject
    /// with arrows tau z -> y (with multiplicity). Hard error on violation.
    pub fn check_mesh_symmetry(&self) -> Result<()> {
        for z in 0..self.objects.len() {
            let Some(tz) = self.tau[z] else { continue };
            let mut incoming: BTreeMap<ObjId, usize> = BTreeMap::new();
            for &a in &self.arrows_in[z] {
                *incoming.entry(self.arrows[a].src).or_insert(0) += 1;
            }
            let mut outgoing: BTreeMap<ObjId, usize> = BTreeMap::new();
            for &a in &self.arrows_out[tz.0] {
                *outgoing.entry(self.arrows[a].dst).or_insert(0) += 1;
            }
            if incoming != outgoing {
                return Err(CatError::MeshSymmetry(format!(
                    "mesh at {} broken: in {:?} vs out-of-translate {:?}",
                    self.label(ObjId(z)),
                    incoming
                        .iter()
                        .map(|(k, v)| (self.label(*k).to_string(), *v))
                        .collect::<Vec<_>>(),
                    outgoing
                        .iter()
                        .map(|(k, v)| (self.label(*k).to_string(), *v))
                        .collect::<Vec<_>>(),
                )));
            }
        }
        Ok(())
    }

    pub fn is_connected(&self) -> bool {
        let n = self.objects.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            let push = |w: ObjId, seen: &mut Vec<bool>, stack: &mut Vec<usize>| {
                if !seen[w.0] {
                    seen[w.0] = true;
                    stack.push(w.0);
                }
            };
            for &a in &self.arrows_out[v] {
                push(self.arrows[a].dst, &mut seen, &mut stack);
            }
            for &a in &self.arrows_in[v] {
                push(self.arrows[a].src, &mut seen, &mut stack);
            }
            if let Some(t) = self.tau[v] {
                push(t, &mut seen, &mut stack);
            }
            if let Some(t) = self.tau_inv[v] {
                push(t, &mut seen, &mut stack);
            }
        }
        seen.into_iter().all(|b| b)
    }

    fn rebuild_adjacency(&mut self) {
        self.arrows_out = vec![Vec::new(); self.objects.len()];
        self.arrows_in = vec![Vec::new(); self.objects.len()];
        for (i, a) in self.arrows.iter().enumerate() {
            self.arrows_out[a.src.0].push(i);
            self.arrows_in[a.dst.0].push(i);
        }
    }
}

/// Render a type A module label: top-to-socle when the support carries a
/// consistent orientation (uniserial), raw dimension vector otherwise.
fn module_label(spec: &DynkinSpec, dimvec: &[usize]) -> String {
    if spec.family == DynkinFamily::A && dimvec.iter().all(|&d| d <= 1) {
        let support: Vec<usize> = dimvec
            .iter()
            .enumerate()
            .filter(|(_, &d)| d > 0)
            .map(|(i, _)| i + 1)
            .collect();
        let interval = support.windows(2).all(|w| w[1] == w[0] + 1);
        if interval && !support.is_empty() {
            let ascending = support
                .windows(2)
                .all(|w| spec.orientation.contains(&(w[0], w[1])));
            let descending = support
                .windows(2)
                .all(|w| spec.orientation.contains(&(w[1], w[0])));
            if ascending {
                return support
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join("/");
            }
            if descending {
                return support
                    .iter()
                    .rev()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join("/");
            }
        }
    }
    format!(
        "({})",
        dimvec
            .iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(",")
    )
}

/// Reachability table over the oriented diagram: paths[i][j] = 1 iff there is
/// a directed path i -> j (trees carry at most one).
fn path_table(spec: &DynkinSpec) -> Vec<Vec<usize>> {
    let n = spec.rank;
    let mut reach = vec![vec![0usize; n]; n];
    for i in 0..n {
        reach[i][i] = 1;
        let mut stack = vec![i + 1];
        while let Some(v) = stack.pop() {
            for w in spec.arrows_from(v) {
                if reach[i][w - 1] == 0 {
                    reach[i][w - 1] = 1;
                    stack.push(w);
                }
            }
        }
    }
    reach
}

struct Knitter {
    spec: DynkinSpec,
    objects: Vec<CatObject>,
    arrows: Vec<Arrow>,
    tau: Vec<Option<ObjId>>,
    tau_inv: Vec<Option<ObjId>>,
    arrows_out: Vec<Vec<usize>>,
    arrows_in: Vec<Vec<usize>>,
    inj_dimvecs: Vec<Vec<usize>>,
    projectives: Vec<ObjId>,
    injectives: Vec<Option<ObjId>>,
}

impl Knitter {
    fn new(spec: &DynkinSpec) -> Self {
        let reach = path_table(spec);
        let n = spec.rank;
        let inj_dimvecs: Vec<Vec<usize>> =
            (0..n).map(|i| (0..n).map(|j| reach[j][i]).collect()).collect();
        let mut k = Knitter {
            spec: spec.clone(),
            objects: Vec::new(),
            arrows: Vec::new(),
            tau: Vec::new(),
            tau_inv: Vec::new(),
            arrows_out: Vec::new(),
            arrows_in: Vec::new(),
            inj_dimvecs,
            projectives: Vec::new(),
            injectives: vec![None; n],
        };
        // Seed with the projective slice.
        for i in 0..n {
            let dimvec: Vec<usize> = (0..n).map(|j| reach[i][j]).collect();
            let id = k.push_module(dimvec, Some(i + 1));
            k.projectives.push(id);
        }
        // Irreducible maps between projectives: P_j -> P_i per arrow i -> j.
        for &(i, j) in &spec.orientation.clone() {
            k.push_arrow(k.projectives[j - 1], k.projectives[i - 1]);
        }
        k
    }

    fn push_module(&mut self, dimvec: Vec<usize>, proj_index: Option<usize>) -> ObjId {
        let id = ObjId(self.objects.len());
        let inj_index = self
            .inj_dimvecs
            .iter()
            .position(|d| *d == dimvec)
            .map(|i| i + 1);
        if let Some(i) = inj_index {
            self.injectives[i - 1] = Some(id);
        }
        self.objects.push(CatObject {
            id,
            kind: ObjKind::Module,
            label: module_label(&self.spec, &dimvec),
            dimvec: Some(dimvec),
            proj_index,
            inj_index,
        });
        self.tau.push(None);
        self.tau_inv.push(None);
        self.arrows_out.push(Vec::new());
        self.arrows_in.push(Vec::new());
        id
    }

    fn push_shifted(&mut self, proj_index: usize) -> ObjId {
        let id = ObjId(self.objects.len());
        self.objects.push(CatObject {
            id,
            kind: ObjKind::ShiftedProjective,
            label: format!("P{}[1]", proj_index),
            dimvec: None,
            proj_index: Some(proj_index),
            inj_index: None,
        });
        self.tau.push(None);
        self.tau_inv.push(None);
        self.arrows_out.push(Vec::new());
        self.arrows_in.push(Vec::new());
        id
    }

    fn push_arrow(&mut self, src: ObjId, dst: ObjId) {
        let idx = self.arrows.len();
        self.arrows.push(Arrow { src, dst });
        self.arrows_out[src.0].push(idx);
        self.arrows_in[dst.0].push(idx);
    }

    fn is_injective(&self, x: ObjId) -> bool {
        self.objects[x.0].inj_index.is_some()
    }

    /// An object may be co-translated once every in-neighbor has been
    /// resolved (co-translated itself, or exempt), because only then is its
    /// set of outgoing arrows complete.
    fn ready(&self, x: ObjId, resolved: &[bool], exempt: impl Fn(ObjId) -> bool) -> bool {
        self.arrows_in[x.0]
            .iter()
            .map(|&a| self.arrows[a].src)
            .all(|w| resolved[w.0] || exempt(w))
    }

    /// Co-translate a module: create tau^{-1} z with the mesh dimension rule
    /// and the mesh arrows y -> tau^{-1} z for every arrow z -> y.
    fn cotranslate_module(&mut self, z: ObjId) -> Result<ObjId> {
        let dim_z = self.objects[z.0].dimvec.clone().expect("module");
        let mut dim = vec![0i64; self.spec.rank];
        let middles: Vec<ObjId> = self.out_neighbors_vec(z);
        for &y in &middles {
            let dy = self.objects[y.0].dimvec.as_ref().expect("module middle");
            for (acc, &d) in dim.iter_mut().zip(dy.iter()) {
                *acc += d as i64;
            }
        }
        for (acc, &d) in dim.iter_mut().zip(dim_z.iter()) {
            *acc -= d as i64;
        }
        if dim.iter().any(|&d| d < 0) || dim.iter().all(|&d| d == 0) {
            return Err(CatError::Knitting(format!(
                "mesh dimension rule failed at {} (not a Dynkin module quiver?)",
                self.objects[z.0].label
            )));
        }
        let dimvec: Vec<usize> = dim.into_iter().map(|d| d as usize).collect();
        let new = self.push_module(dimvec, None);
        self.tau[new.0] = Some(z);
        self.tau_inv[z.0] = Some(new);
        for y in middles {
            self.push_arrow(y, new);
        }
        Ok(new)
    }

    fn out_neighbors_vec(&self, z: ObjId) -> Vec<ObjId> {
        self.arrows_out[z.0]
            .iter()
            .map(|&a| self.arrows[a].dst)
            .collect()
    }

    /// Knit all of mod H: co-translate non-injectives until only injectives
    /// remain unresolved.
    fn knit_modules(&mut self) -> Result<()> {
        let expected = self.spec.positive_root_count();
        let mut resolved = vec![false; self.objects.len()];
        loop {
            let candidate = (0..self.objects.len())
                .map(ObjId)
                .find(|&x| !resolved[x.0] && !self.is_injective(x) && {
                    let r = &resolved;
                    self.ready(x, r, |w| self.is_injective(w))
                });
            match candidate {
                Some(z) => {
                    let new = self.cotranslate_module(z)?;
                    resolved[z.0] = true;
                    resolved.push(false);
                    debug_assert_eq!(resolved.len(), self.objects.len());
                    let _ = new;
                    if self.objects.len() > expected {
                        return Err(CatError::Knitting(format!(
                            "knitting produced more than {} modules",
                            expected
                        )));
                    }
                }
                None => break,
            }
        }
        if self.objects.len() != expected {
            return Err(CatError::Knitting(format!(
                "knitting stopped at {} of {} modules",
                self.objects.len(),
                expected
            )));
        }
        if self.injectives.iter().any(Option::is_none) {
            return Err(CatError::Knitting("missing injective modules".into()));
        }
        Ok(())
    }

    /// One more co-translation round: each injective I_i yields the shifted
    /// projective P_i[1].
    fn knit_shifted_round(&mut self) -> Result<()> {
        let n = self.spec.rank;
        let module_count = self.objects.len();
        let mut resolved = vec![false; module_count + n];
        // Non-injective modules were all co-translated during knitting.
        for x in 0..module_count {
            resolved[x] = !self.is_injective(ObjId(x));
        }
        for _ in 0..n {
            let candidate = (0..self.objects.len()).map(ObjId).find(|&x| {
                !resolved[x.0]
                    && self.is_injective(x)
                    && self.ready(x, &resolved, |_| false)
            });
            let Some(inj) = candidate else {
                return Err(CatError::Knitting(
                    "shifted-projective round stalled".into(),
                ));
            };
            let i = self.objects[inj.0].inj_index.expect("injective");
            let middles = self.out_neighbors_vec(inj);
            let new = self.push_shifted(i);
            self.tau[new.0] = Some(inj);
            self.tau_inv[inj.0] = Some(new);
            for y in middles {
                self.push_arrow(y, new);
            }
            resolved[inj.0] = true;
        }
        Ok(())
    }

    fn into_quiver(self, stable: bool) -> TranslationQuiver {
        TranslationQuiver {
            spec: self.spec,
            objects: self.objects,
            arrows: self.arrows,
            tau: self.tau,
            tau_inv: self.tau_inv,
            projectives: self.projectives,
            injectives: self.injectives.into_iter().map(|x| x.expect("injective")).collect(),
            shifted: Vec::new(),
            stable,
            arrows_out: self.arrows_out,
            arrows_in: self.arrows_in,
        }
    }
}

/// The AR-quiver of mod H: all indecomposables with irreducible maps, tau
/// defined off the projectives.
pub fn knit_module_category(spec: &DynkinSpec) -> Result<TranslationQuiver> {
    let mut k = Knitter::new(spec);
    k.knit_modules()?;
    let mut q = k.into_quiver(false);
    q.rebuild_adjacency();
    Ok(q)
}

/// The stable translation quiver of the cluster category: ind H plus the
/// shifted projectives, with the translation closed up.
pub fn build_cluster_quiver(spec: &DynkinSpec) -> Result<TranslationQuiver> {
    let mut k = Knitter::new(spec);
    k.knit_modules()?;
    k.knit_shifted_round()?;
    let n = spec.rank;
    // Locate the shifted slice by label order P_1[1] .. P_n[1].
    let mut shifted = vec![ObjId(0); n];
    for o in &k.objects {
        if o.kind == ObjKind::ShiftedProjective {
            shifted[o.proj_index.expect("indexed") - 1] = o.id;
        }
    }
    // Glue: tau P_i = P_i[1]; wrap arrows P_j[1] -> P_k per arrow j -> k.
    for i in 0..n {
        let p = k.projectives[i];
        k.tau[p.0] = Some(shifted[i]);
        k.tau_inv[shifted[i].0] = Some(p);
    }
    for &(j, kk) in &spec.orientation.clone() {
        k.push_arrow(shifted[j - 1], k.projectives[kk - 1]);
    }
    let mut q = k.into_quiver(true);
    q.shifted = shifted;
    q.rebuild_adjacency();
    let expected = spec.positive_root_count() + n;
    if q.object_count() != expected {
        return Err(CatError::Knitting(format!(
            "cluster quiver has {} objects, expected {}",
            q.object_count(),
            expected
        )));
    }
    q.check_mesh_symmetry()?;
    if !q.is_connected() {
        return Err(CatError::MeshSymmetry("cluster quiver is disconnected".into()));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a3() -> DynkinSpec {
        DynkinSpec::type_a_linear(3)
    }

    #[test]
    fn knit_a3_modules() {
        let q = knit_module_category(&a3()).unwrap();
        let mut labels: Vec<&str> = q.objects.iter().map(|o| o.label.as_str()).collect();
        labels.sort();
        assert_eq!(labels, vec!["1", "1/2", "1/2/3", "2", "2/3", "3"]);
        // tau is undefined exactly on the projectives
        for o in &q.objects {
            assert_eq!(q.tau_of(o.id).is_none(), o.proj_index.is_some());
        }
    }

    #[test]
    fn knit_a1() {
        let q = knit_module_category(&DynkinSpec::type_a_linear(1)).unwrap();
        assert_eq!(q.object_count(), 1);
        assert_eq!(q.label(ObjId(0)), "1");
    }

    #[test]
    fn knit_a4_has_ten_modules() {
        let q = knit_module_category(&DynkinSpec::type_a_linear(4)).unwrap();
        assert_eq!(q.object_count(), 10);
    }

    #[test]
    fn cluster_a3_glue() {
        let q = build_cluster_quiver(&a3()).unwrap();
        assert_eq!(q.object_count(), 9);
        let p3s = q.by_label("P3[1]").unwrap();
        let i3 = q.by_label("1/2/3").unwrap();
        assert_eq!(q.tau_of(p3s), Some(i3));
        // shift identifications from the worked A_3 example
        let two = q.by_label("2").unwrap();
        let three = q.by_label("3").unwrap();
        assert_eq!(q.shift(two, 1).unwrap(), three);
        let m12 = q.by_label("1/2").unwrap();
        let m23 = q.by_label("2/3").unwrap();
        assert_eq!(q.shift(m12, 1).unwrap(), m23);
        assert_eq!(q.shift(two, 0).unwrap(), two);
    }

    #[test]
    fn cluster_a3_tau_cycles() {
        let q = build_cluster_quiver(&a3()).unwrap();
        let mut cycles: Vec<Vec<String>> = q
            .tau_cycles()
            .into_iter()
            .map(|c| c.into_iter().map(|x| q.label(x).to_string()).collect())
            .collect();
        cycles.sort_by_key(|c| c.len());
        assert_eq!(cycles.len(), 2);
        let rotate_to = |cycle: &[String], start: &str| -> Vec<String> {
            let k = cycle.iter().position(|l| l == start).expect("member");
            cycle.iter().cycle().skip(k).take(cycle.len()).cloned().collect()
        };
        assert_eq!(rotate_to(&cycles[0], "2/3"), vec!["2/3", "P2[1]", "1/2"]);
        assert_eq!(
            rotate_to(&cycles[1], "3"),
            vec!["3", "P3[1]", "1/2/3", "P1[1]", "1", "2"]
        );
    }

    #[test]
    fn cluster_object_counts_match_formula() {
        for n in 1..=8 {
            let q = build_cluster_quiver(&DynkinSpec::type_a_linear(n)).unwrap();
            assert_eq!(q.object_count(), n * (n + 3) / 2);
        }
    }

    #[test]
    fn mesh_symmetry_and_periodicity() {
        let q = build_cluster_quiver(&a3()).unwrap();
        q.check_mesh_symmetry().unwrap();
        // order of tau divides lcm of cycle lengths (6 and 3): tau^6 = id
        for o in &q.objects {
            assert_eq!(q.shift(o.id, 6).unwrap(), o.id);
        }
    }

    #[test]
    fn module_fragment_embeds() {
        let frag = knit_module_category(&a3()).unwrap();
        let full = build_cluster_quiver(&a3()).unwrap();
        let frag_arrows: Vec<(String, String)> = frag
            .arrows
            .iter()
            .map(|a| (frag.label(a.src).to_string(), frag.label(a.dst).to_string()))
            .collect();
        for (s, t) in frag_arrows {
            let fs = full.by_label(&s).unwrap();
            let ft = full.by_label(&t).unwrap();
            assert!(full.arrow_between(fs, ft).unwrap().is_some());
        }
    }

    #[test]
    fn nonlinear_orientation_knits() {
        // 1 -> 2 <- 3: bending module gets a raw dimvec label
        let spec = DynkinSpec::new(
            DynkinFamily::A,
            3,
            vec![(1, 2), (3, 2)],
            false,
        )
        .unwrap();
        let q = build_cluster_quiver(&spec).unwrap();
        assert_eq!(q.object_count(), 9);
        assert!(q.by_label("(1,1,1)").is_ok());
        q.check_mesh_symmetry().unwrap();
    }

    #[test]
    fn experimental_d4() {
        let spec = DynkinSpec::new(
            DynkinFamily::D,
            4,
            DynkinSpec::diagram_edges(DynkinFamily::D, 4),
            true,
        )
        .unwrap();
        let q = build_cluster_quiver(&spec).unwrap();
        assert_eq!(q.object_count(), 12 + 4);
        q.check_mesh_symmetry().unwrap();
    }
}
