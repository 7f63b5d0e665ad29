use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock};

use super::perm::{block_embed, diag_embed, slot_embed, Perm};
use crate::error::{Error, Result};

/// Largest group order we enumerate.
pub const ENUMERATION_LIMIT: usize = 40320;

/// A permutation group given by generators, with its elements enumerated.
///
/// Elements are sorted lexicographically (identity first). Every element carries a
/// word in the generators: `g = gens[w[0]] ∘ gens[w[1]] ∘ ...`, recorded by a BFS tree
/// in which each element is `gens[s] ∘ parent`.
pub struct Group {
    degree: usize,
    gens: Vec<Perm>,
    name: String,
    elements: Vec<Perm>,
    index: HashMap<Perm, usize>,
    /// `(element, parent, generator)` with `element = gens[generator] ∘ parent`, in BFS order.
    tree: Vec<(usize, usize, usize)>,
    parent: Vec<(usize, usize)>,
    mult: OnceLock<Vec<u16>>,
    inverses: OnceLock<Vec<usize>>,
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order())
    }
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.gens == other.gens
    }
}

impl Eq for Group {}

impl Group {
    /// The group generated by `gens` in degree `degree`. Generator order is preserved.
    pub fn generated(degree: usize, gens: Vec<Perm>, name: impl Into<String>) -> Result<Arc<Group>> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let id = Perm::identity(degree);
        let mut found = vec![id.clone()];
        let mut seen: HashMap<Perm, usize> = HashMap::new();
        seen.insert(id, 0);
        let mut tree = vec![(0usize, usize::MAX)];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (gi, g) in gens.iter().enumerate() {
                let h = g.then_after(&found[i]);
                if !seen.contains_key(&h) {
                    if found.len() >= ENUMERATION_LIMIT {
                        return Err(Error::EnumerationUnavailable {
                            limit: ENUMERATION_LIMIT,
                        });
                    }
                    seen.insert(h.clone(), found.len());
                    found.push(h);
                    tree.push((i, gi));
                    queue.push_back(found.len() - 1);
                }
            }
        }
        // sort lexicographically, remap the BFS tree
        let mut order: Vec<usize> = (0..found.len()).collect();
        order.sort_by(|&a, &b| found[a].cmp(&found[b]));
        let mut pos = vec![0; found.len()];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let elements: Vec<Perm> = order.iter().map(|&o| found[o].clone()).collect();
        let index = elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        // BFS order is kept so that parents come before children
        let bfs: Vec<(usize, usize, usize)> = (0..found.len())
            .map(|old| {
                let (par, gen) = tree[old];
                (pos[old], pos[par], gen)
            })
            .collect();
        let mut parent = vec![(0, usize::MAX); bfs.len()];
        for &(e, p, g) in &bfs {
            parent[e] = (p, g);
        }
        Ok(Arc::new(Group {
            degree,
            gens,
            name: name.into(),
            elements,
            index,
            tree: bfs,
            parent,
            mult: OnceLock::new(),
            inverses: OnceLock::new(),
        }))
    }

    /// `S_n` generated by the Coxeter generators `s_1, ..., s_{n-1}`.
    pub fn symmetric(n: usize) -> Result<Arc<Group>> {
        let gens = (1..n).map(|i| Perm::transposition(n, i, i + 1)).collect();
        Group::generated(n, gens, format!("S{n}"))
    }

    /// Cyclic group generated by `(1 2 ... n)`.
    pub fn cyclic(n: usize) -> Result<Arc<Group>> {
        let pts: Vec<usize> = (1..=n).collect();
        let gens = if n > 1 { vec![Perm::cycle(n, &pts)?] } else { vec![] };
        Group::generated(n, gens, format!("C{n}"))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }
    pub fn gens(&self) -> &[Perm] {
        &self.gens
    }
    pub fn name(&self) -> &str {
        &self.name
    }
    pub fn order(&self) -> usize {
        self.elements.len()
    }
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }
    pub fn element(&self, i: usize) -> &Perm {
        &self.elements[i]
    }
    pub fn index_of(&self, g: &Perm) -> Option<usize> {
        self.index.get(g).copied()
    }
    pub fn contains(&self, g: &Perm) -> bool {
        self.index.contains_key(g)
    }

    /// Human-readable descriptor: name plus generators.
    pub fn descriptor(&self) -> String {
        let gens: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        format!("{} deg {} <{}>", self.name, self.degree, gens.join(","))
    }

    /// Elements in BFS order as `(element, parent, generator)`; the root has generator `usize::MAX`.
    pub fn bfs_tree(&self) -> &[(usize, usize, usize)] {
        &self.tree
    }

    /// Word in the generators for an element of the group.
    pub fn word(&self, g: &Perm) -> Option<Vec<usize>> {
        let mut cur = self.index_of(g)?;
        let mut w = Vec::new();
        while self.parent[cur].1 != usize::MAX {
            let (p, s) = self.parent[cur];
            w.push(s);
            cur = p;
        }
        Some(w)
    }

    pub fn eval_word(&self, w: &[usize]) -> Perm {
        w.iter()
            .fold(Perm::identity(self.degree), |acc, &i| acc.then_after(&self.gens[i]))
    }

    /// Multiplication table `mult[i * |G| + j] = index(e_i ∘ e_j)` (orders below 2^16).
    pub fn mult_table(&self) -> &[u16] {
        self.mult.get_or_init(|| {
            let n = self.order();
            assert!(n <= u16::MAX as usize, "multiplication table too large");
            let mut t = vec![0u16; n * n];
            for (i, a) in self.elements.iter().enumerate() {
                for (j, b) in self.elements.iter().enumerate() {
                    t[i * n + j] = self.index[&a.then_after(b)] as u16;
                }
            }
            t
        })
    }

    pub fn inverse_index(&self) -> &[usize] {
        self.inverses.get_or_init(|| {
            self.elements
                .iter()
                .map(|g| self.index[&g.inverse()])
                .collect()
        })
    }

    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree == other.degree && self.gens.iter().all(|g| other.contains(g))
    }

    /// Checks that `h` is a subgroup of `self`.
    pub fn check_subgroup(&self, h: &Group) -> Result<()> {
        if h.is_subgroup_of(self) {
            Ok(())
        } else {
            Err(Error::NotSubgroup(format!("{} in {}", h.name, self.name)))
        }
    }

    /// Subgroup generated by the given elements of `self`.
    pub fn subgroup(&self, gens: Vec<Perm>, name: impl Into<String>) -> Result<Arc<Group>> {
        let h = Group::generated(self.degree, gens, name)?;
        self.check_subgroup(&h)?;
        Ok(h)
    }

    /// One representative per left coset `gH`, each lexicographically least in its coset,
    /// sorted (so the identity comes first).
    pub fn transversal(&self, h: &Group) -> Result<Vec<Perm>> {
        self.check_subgroup(h)?;
        let mut covered = vec![false; self.order()];
        let mut reps = Vec::with_capacity(self.order() / h.order());
        for (i, g) in self.elements.iter().enumerate() {
            if covered[i] {
                continue;
            }
            reps.push(g.clone());
            for x in h.elements() {
                covered[self.index[&g.then_after(x)]] = true;
            }
        }
        Ok(reps)
    }

    /// One representative per double coset `AxB`, each lexicographically least in its coset.
    pub fn double_cosets(&self, a: &Group, b: &Group) -> Result<Vec<Perm>> {
        self.check_subgroup(a)?;
        self.check_subgroup(b)?;
        let mut covered = vec![false; self.order()];
        let mut reps = Vec::new();
        for (i, x) in self.elements.iter().enumerate() {
            if covered[i] {
                continue;
            }
            reps.push(x.clone());
            for u in a.elements() {
                let ux = u.then_after(x);
                for v in b.elements() {
                    covered[self.index[&ux.then_after(v)]] = true;
                }
            }
        }
        Ok(reps)
    }

    /// Size of the double coset `AxB`.
    pub fn double_coset_size(a: &Group, x: &Perm, b: &Group) -> usize {
        let xbx = conjugate_elements(b, x);
        let inter = a.elements().iter().filter(|g| xbx.contains(*g)).count();
        a.order() * b.order() / inter
    }

    /// `x H x⁻¹` as a group generated by conjugated generators.
    pub fn conjugate(h: &Group, x: &Perm) -> Result<Arc<Group>> {
        let gens = h.gens.iter().map(|g| g.conjugate_by(x)).collect();
        Group::generated(h.degree, gens, format!("{}^{}", h.name, x))
    }

    /// Elements of `self ∩ other`, as a group generated by them.
    pub fn intersection(&self, other: &Group, name: impl Into<String>) -> Result<Arc<Group>> {
        let els: Vec<Perm> = self
            .elements
            .iter()
            .filter(|g| other.contains(g))
            .cloned()
            .collect();
        generated_by_elements(self.degree, els, name)
    }

    pub fn normalizer(&self, h: &Group) -> Result<Arc<Group>> {
        self.check_subgroup(h)?;
        let els: Vec<Perm> = self
            .elements
            .iter()
            .filter(|x| h.gens.iter().all(|g| h.contains(&g.conjugate_by(x))))
            .cloned()
            .collect();
        generated_by_elements(self.degree, els, format!("N({})", h.name))
    }

    pub fn centralizer(&self, h: &Group) -> Result<Arc<Group>> {
        self.check_subgroup(h)?;
        let els: Vec<Perm> = self
            .elements
            .iter()
            .filter(|x| h.gens.iter().all(|g| g.then_after(x) == x.then_after(g)))
            .cloned()
            .collect();
        generated_by_elements(self.degree, els, format!("C({})", h.name))
    }

    /// Some `x` in `self` with `x H x⁻¹ = K`.
    pub fn conjugator(&self, h: &Group, k: &Group) -> Option<Perm> {
        if h.order() != k.order() {
            return None;
        }
        self.elements
            .iter()
            .find(|x| h.gens.iter().all(|g| k.contains(&g.conjugate_by(x))))
            .cloned()
    }

    /// A Sylow `p`-subgroup, grown greedily from the identity by adjoining `p`-elements
    /// of the normalizer.
    pub fn sylow(&self, p: usize) -> Result<Arc<Group>> {
        let mut target = 1;
        let mut n = self.order();
        while n.is_multiple_of(p) {
            n /= p;
            target *= p;
        }
        let mut cur = Group::generated(self.degree, vec![], format!("Syl{p}"))?;
        while cur.order() < target {
            let norm = self.normalizer(&cur)?;
            let x = norm
                .elements()
                .iter()
                .find(|x| !cur.contains(x) && is_p_power(x.order(), p) && {
                    // x must have p-power order modulo cur
                    let mut y = (*x).clone();
                    let mut k = 1;
                    while !cur.contains(&y) {
                        y = y.then_after(x);
                        k += 1;
                    }
                    is_p_power(k, p)
                })
                .cloned()
                .expect("a p-subgroup that is not Sylow grows inside its normalizer");
            let mut gens = cur.gens.clone();
            gens.push(x);
            cur = Group::generated(self.degree, gens, format!("Syl{p}"))?;
        }
        Ok(cur)
    }

    /// All subgroups of `self` (by enumeration of joins); intended for small `p`-groups.
    pub fn all_subgroups(&self) -> Result<Vec<Arc<Group>>> {
        let mut found: Vec<Arc<Group>> = vec![Group::generated(self.degree, vec![], "1")?];
        let mut keys: std::collections::HashSet<Vec<usize>> = std::collections::HashSet::new();
        keys.insert(vec![self.index[&Perm::identity(self.degree)]]);
        let mut i = 0;
        while i < found.len() {
            let k = found[i].clone();
            for x in &self.elements {
                if k.contains(x) {
                    continue;
                }
                let mut gens = k.gens.clone();
                gens.push(x.clone());
                let cand = Group::generated(self.degree, gens, "")?;
                let key = element_key(self, &cand);
                if keys.insert(key) {
                    found.push(cand);
                }
            }
            i += 1;
        }
        Ok(found)
    }

    /// Representatives of the conjugacy classes of `p`-subgroups, sorted by order.
    pub fn p_subgroup_classes(&self, p: usize) -> Result<Vec<Arc<Group>>> {
        let syl = self.sylow(p)?;
        let mut reps: Vec<Arc<Group>> = Vec::new();
        for h in syl.all_subgroups()? {
            if !reps.iter().any(|r| self.conjugator(r, &h).is_some()) {
                reps.push(h);
            }
        }
        reps.sort_by_key(|h| (h.order(), element_key(self, h)));
        Ok(reps)
    }
}

fn is_p_power(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

fn element_key(parent: &Group, h: &Group) -> Vec<usize> {
    let mut k: Vec<usize> = h.elements().iter().map(|g| parent.index[g]).collect();
    k.sort_unstable();
    k
}

fn conjugate_elements(b: &Group, x: &Perm) -> std::collections::HashSet<Perm> {
    b.elements().iter().map(|g| g.conjugate_by(x)).collect()
}

/// Builds a group from a full element list by greedily picking generators.
pub fn generated_by_elements(degree: usize, els: Vec<Perm>, name: impl Into<String>) -> Result<Arc<Group>> {
    let name = name.into();
    let mut cur = Group::generated(degree, vec![], name.clone())?;
    for g in els {
        if !cur.contains(&g) {
            let mut gens = cur.gens.clone();
            gens.push(g);
            cur = Group::generated(degree, gens, name.clone())?;
        }
    }
    Ok(cur)
}

/// `Δ_a(H)` for `H ≤ S_b`, generated by the diagonal images of `H`'s generators.
pub fn diag_subgroup(h: &Group, a: usize) -> Vec<Perm> {
    h.gens().iter().map(|g| diag_embed(g, a)).collect()
}

/// `H^[b]` for `H ≤ S_a`.
pub fn block_subgroup(h: &Group, b: usize) -> Vec<Perm> {
    h.gens().iter().map(|g| block_embed(g, b)).collect()
}

/// `∏_r H[r]` for `H ≤ S_b`, `a` slots.
pub fn slots_subgroup(h: &Group, a: usize) -> Vec<Perm> {
    (1..=a)
        .flat_map(|r| h.gens().iter().map(move |g| slot_embed(g, r, a).expect("valid slot")))
        .collect()
}
