//! Deterministic Schreier–Sims stabilizer chain.
//!
//! Base points are chosen as the smallest point moved by the generator that
//! forces a new level, so two runs on the same generator list always produce
//! the same chain and the same element enumeration order.

use super::permutation::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    strong: Vec<Permutation>,
    /// Orbit of `base` under `strong`: `base` first, then ascending.
    orbit: Vec<usize>,
    /// `position[x]` is the index of `x` in `orbit`.
    position: Vec<Option<usize>>,
    /// `transversal[x]` maps `base` to `x`.
    transversal: Vec<Option<Permutation>>,
    inverse: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        let mut level = Level {
            base,
            strong: Vec::new(),
            orbit: Vec::new(),
            position: Vec::new(),
            transversal: Vec::new(),
            inverse: Vec::new(),
        };
        level.rebuild(degree);
        level
    }

    fn rebuild(&mut self, degree: usize) {
        let mut transversal: Vec<Option<Permutation>> = vec![None; degree];
        transversal[self.base] = Some(Permutation::identity(degree));
        let mut queue = vec![self.base];
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for s in &self.strong {
                let y = s.apply(x);
                if transversal[y].is_none() {
                    let ux = transversal[x].as_ref().expect("visited point has a transversal");
                    transversal[y] = Some(s.mul(ux));
                    queue.push(y);
                }
            }
        }
        queue[1..].sort_unstable();
        self.position = vec![None; degree];
        for (i, &x) in queue.iter().enumerate() {
            self.position[x] = Some(i);
        }
        self.inverse = transversal
            .iter()
            .map(|t| t.as_ref().map(Permutation::inverse))
            .collect();
        self.transversal = transversal;
        self.orbit = queue;
    }
}

#[derive(Clone, Debug)]
pub(crate) struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub(crate) fn build(degree: usize, generators: &[Permutation]) -> Self {
        let mut gens: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        if gens.is_empty() {
            return chain;
        }

        // Initial base: no generator may fix every base point.
        for g in &gens {
            let bases: Vec<usize> = chain.levels.iter().map(|l| l.base).collect();
            if bases.iter().all(|&b| g.apply(b) == b) {
                let b = g.smallest_moved_point().expect("non-identity");
                chain.levels.push(Level::new(b, degree));
            }
        }
        for g in &gens {
            for i in 0..chain.levels.len() {
                chain.levels[i].strong.push(g.clone());
                if g.apply(chain.levels[i].base) != chain.levels[i].base {
                    break;
                }
            }
        }

        let mut i = chain.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let lvl = i as usize;
            chain.levels[lvl].rebuild(degree);
            let orbit = chain.levels[lvl].orbit.clone();
            let strong = chain.levels[lvl].strong.clone();
            for &x in &orbit {
                for s in &strong {
                    let y = s.apply(x);
                    let level = &chain.levels[lvl];
                    let h = level.inverse[y]
                        .as_ref()
                        .expect("orbit closed")
                        .mul(s)
                        .mul(level.transversal[x].as_ref().expect("orbit point"));
                    if h.is_identity() {
                        continue;
                    }
                    let (residue, j) = chain.sift_from(h, lvl + 1);
                    if residue.is_identity() {
                        continue;
                    }
                    if j == chain.levels.len() {
                        let b = residue.smallest_moved_point().expect("non-identity");
                        chain.levels.push(Level::new(b, degree));
                    }
                    for l in lvl + 1..=j {
                        chain.levels[l].strong.push(residue.clone());
                    }
                    i = j as isize;
                    continue 'outer;
                }
            }
            i -= 1;
        }
        chain
    }

    /// Sifts `g` starting at level `start`; returns the residue and the level
    /// where sifting stopped (`levels.len()` when it passed every level).
    fn sift_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let x = g.apply(level.base);
            match &level.inverse[x] {
                Some(inv) => g = inv.mul(&g),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    pub(crate) fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub(crate) fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift_from(g.clone(), 0).0.is_identity()
    }

    pub(crate) fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub(crate) fn strong_generators(&self) -> Vec<Permutation> {
        self.levels.first().map(|l| l.strong.clone()).unwrap_or_default()
    }

    /// Position of `g` in canonical chain order, or `None` if `g` is not a member.
    pub(crate) fn index_of(&self, g: &Permutation) -> Option<usize> {
        if g.degree() != self.degree {
            return None;
        }
        let mut g = g.clone();
        let mut index = 0usize;
        for level in &self.levels {
            let x = g.apply(level.base);
            let inv = level.inverse[x].as_ref()?;
            let pos = level.position[x].expect("orbit point");
            index = index * level.orbit.len() + pos;
            g = inv.mul(&g);
        }
        g.is_identity().then_some(index)
    }

    /// All elements in canonical chain order; the identity comes first.
    ///
    /// Element with mixed-radix index `(i_0, …, i_k)` is `u_0 ∘ u_1 ∘ … ∘ u_k`
    /// with `u_l` the transversal element for the `i_l`-th orbit point.
    pub(crate) fn elements(&self) -> Vec<Permutation> {
        let mut acc = vec![Permutation::identity(self.degree)];
        for level in &self.levels {
            let mut next = Vec::with_capacity(acc.len() * level.orbit.len());
            for prefix in &acc {
                for &x in &level.orbit {
                    next.push(prefix.mul(level.transversal[x].as_ref().expect("orbit point")));
                }
            }
            acc = next;
        }
        acc
    }
}
