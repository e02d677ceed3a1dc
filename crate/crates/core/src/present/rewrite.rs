use std::collections::{BTreeMap, VecDeque};

use super::parser::Presentation;
use super::poly::{NcPoly, Word};
use crate::algebra::StructAlgebra;
use crate::cyclo::CycScalar;
use crate::error::{Error, Result};
use crate::exactla::{zero_vector, Vector};
use crate::hopf::{make_hopf, CoRow, HopfAlgebra};

/// Reduction rule lead → tail with tail < lead.
#[derive(Clone, Debug)]
pub struct Rule {
    pub lead: Word,
    pub tail: NcPoly,
}

/// Deglex rewriting system for a two-sided ideal.
#[derive(Clone, Debug)]
pub struct Rewriter {
    pub rules: Vec<Rule>,
}

const MAX_STEPS: usize = 200_000;

impl Rewriter {
    /// Rule applicable to w: (rule index, position).
    fn find_redex(&self, w: &Word) -> Option<(usize, usize)> {
        self.rules.iter().enumerate().find_map(|(r, rule)| w.find(&rule.lead).map(|p| (r, p)))
    }

    pub fn is_reducible(&self, w: &Word) -> bool {
        self.find_redex(w).is_some()
    }

    fn apply(&self, w: &Word, r: usize, p: usize) -> NcPoly {
        let rule = &self.rules[r];
        let u = Word(w.0[..p].to_vec());
        let v = Word(w.0[p + rule.lead.len()..].to_vec());
        rule.tail.sandwich(&u, &v)
    }

    /// Normal form, always rewriting the largest reducible monomial at its leftmost redex.
    pub fn normal_form(&self, p: &NcPoly) -> NcPoly {
        self.normal_form_with(p, |_| 0)
    }

    /// Normal form with a caller-chosen redex among all occurrences in the largest
    /// reducible monomial; any choice yields the same result when the system is confluent.
    pub fn normal_form_with(&self, p: &NcPoly, mut choose: impl FnMut(usize) -> usize) -> NcPoly {
        let mut p = p.clone();
        loop {
            let target = p.terms.iter().rev().find(|(w, _)| self.is_reducible(w)).map(|(w, c)| (w.clone(), c.clone()));
            let Some((w, c)) = target else { return p };
            let redexes: Vec<(usize, usize)> = self
                .rules
                .iter()
                .enumerate()
                .flat_map(|(r, rule)| w.positions(&rule.lead).into_iter().map(move |pos| (r, pos)))
                .collect();
            let (r, pos) = redexes[choose(redexes.len()) % redexes.len()];
            p.terms.remove(&w);
            p = p.add(&self.apply(&w, r, pos).scale(&c));
        }
    }
}

fn make_rule(p: &NcPoly) -> Option<Rule> {
    let (lead, lc) = p.leading()?;
    let lead = lead.clone();
    let inv = lc.inv().expect("nonzero leading coefficient");
    let mut tail = p.scale(&-&inv);
    tail.terms.remove(&lead);
    Some(Rule { lead, tail })
}

fn rule_poly(r: &Rule) -> NcPoly {
    let mut p = r.tail.neg();
    p.add_term(r.lead.clone(), &CycScalar::one(p.field));
    p
}

/// Overlap polynomials of a with b: lead(a) = u·s, lead(b) = s·v.
fn overlaps(a: &Rule, b: &Rule, cap: usize, truncated: &mut bool) -> Vec<NcPoly> {
    let (u, v) = (&a.lead.0, &b.lead.0);
    let mut out = Vec::new();
    for k in 1..u.len().min(v.len()) {
        if u[u.len() - k..] != v[..k] {
            continue;
        }
        if u.len() + v.len() - k > cap {
            *truncated = true;
            continue;
        }
        let left = Word(u[..u.len() - k].to_vec());
        let right = Word(v[k..].to_vec());
        out.push(a.tail.sandwich(&Word::one(), &right).sub(&b.tail.sandwich(&left, &Word::one())));
    }
    out
}

/// Overlap completion bounded by `cap` on the length of ambiguities.
pub fn complete(rels: &[NcPoly], cap: usize) -> Result<Rewriter> {
    let mut sys = Rewriter { rules: Vec::new() };
    let mut queue: VecDeque<NcPoly> = rels.iter().cloned().collect();
    let mut truncated = false;
    let mut steps = 0;
    while let Some(p) = queue.pop_front() {
        steps += 1;
        if steps > MAX_STEPS {
            return Err(Error::NotConfluent(cap));
        }
        let r = sys.normal_form(&p);
        let Some(rule) = make_rule(&r) else { continue };
        // rules whose lead contains the new lead go back to the queue
        let (keep, back): (Vec<Rule>, Vec<Rule>) = sys.rules.drain(..).partition(|old| old.lead.find(&rule.lead).is_none());
        sys.rules = keep;
        queue.extend(back.iter().map(rule_poly));
        for old in &sys.rules {
            queue.extend(overlaps(old, &rule, cap, &mut truncated));
            queue.extend(overlaps(&rule, old, cap, &mut truncated));
        }
        queue.extend(overlaps(&rule, &rule, cap, &mut truncated));
        sys.rules.push(rule);
    }
    if truncated {
        return Err(Error::NotConfluent(cap));
    }
    // interreduce tails
    let snapshot = sys.clone();
    for rule in &mut sys.rules {
        rule.tail = snapshot.normal_form(&rule.tail);
    }
    sys.rules.sort_by(|a, b| a.lead.cmp(&b.lead));
    Ok(sys)
}

/// Finite-dimensional algebra emitted by a confluent presentation.
#[derive(Clone, Debug)]
pub struct Completion {
    pub gens: Vec<String>,
    pub rewriter: Rewriter,
    /// Irreducible words in deglex order; index 0 is the empty word.
    pub basis: Vec<Word>,
    pub algebra: StructAlgebra,
    pub comult: Vec<CoRow>,
    pub counit: Vector,
}

impl Completion {
    pub fn labels(&self) -> Vec<String> {
        self.basis.iter().map(|w| w.label(&self.gens)).collect()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis coordinates of a polynomial after reduction.
    pub fn coordinates(&self, p: &NcPoly) -> Result<Vector> {
        coords(&self.basis, &self.rewriter.normal_form(p), self.algebra.field())
    }

    pub fn to_hopf(&self) -> Result<HopfAlgebra> {
        make_hopf(self.algebra.clone(), self.comult.clone(), self.counit.clone())?.with_labels(self.labels())
    }
}

fn coords(basis: &[Word], p: &NcPoly, field: crate::cyclo::FieldSpec) -> Result<Vector> {
    let mut v = zero_vector(field, basis.len());
    for (w, c) in &p.terms {
        let k = basis
            .binary_search(w)
            .map_err(|_| Error::Internal(format!("normal form contains a non-basis word {:?}", w.0)))?;
        v[k] = c.lift(field);
    }
    Ok(v)
}

fn irreducible_words(sys: &Rewriter, ngens: usize, cap: usize) -> Result<Vec<Word>> {
    let mut basis = vec![Word::one()];
    let mut layer = vec![Word::one()];
    for len in 1..=cap {
        let mut next = Vec::new();
        for w in &layer {
            for g in 0..ngens {
                let mut v = w.0.clone();
                v.push(g);
                let v = Word(v);
                if !sys.is_reducible(&v) {
                    next.push(v);
                }
            }
        }
        if next.is_empty() {
            basis.sort();
            return Ok(basis);
        }
        basis.extend(next.iter().cloned());
        if len == cap {
            return Err(Error::InfiniteBasis { count: basis.len(), cap });
        }
        layer = next;
    }
    basis.sort();
    Ok(basis)
}

pub fn complete_rewriting(p: &Presentation, cap: usize) -> Result<Completion> {
    let field = p.field;
    let rewriter = complete(&p.rels, cap)?;
    let basis = irreducible_words(&rewriter, p.gens.len(), cap)?;
    let d = basis.len();
    let index: BTreeMap<Word, usize> = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let mut entries = Vec::new();
    for (i, a) in basis.iter().enumerate() {
        for (j, b) in basis.iter().enumerate() {
            let nf = rewriter.normal_form(&NcPoly::monomial(CycScalar::one(field), a.concat(b)));
            for (w, c) in &nf.terms {
                let k = *index.get(w).ok_or_else(|| Error::Internal("product leaves the basis".into()))?;
                entries.push((i, j, k, c.clone()));
            }
        }
    }
    let mut unit = zero_vector(field, d);
    unit[0] = CycScalar::one(field);
    let algebra = StructAlgebra::new(field, d, entries, unit)?;
    // Δ and ε on generators in basis coordinates
    let gen_delta: Vec<BTreeMap<(usize, usize), CycScalar>> = p
        .delta
        .iter()
        .map(|sum| {
            let mut acc = BTreeMap::new();
            for (l, r) in sum {
                let lv = coords(&basis, &rewriter.normal_form(l), field)?;
                let rv = coords(&basis, &rewriter.normal_form(r), field)?;
                for (a, x) in lv.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    for (b, y) in rv.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                        crate::hopf::accumulate(&mut acc, (a, b), &(x * y));
                    }
                }
            }
            Ok(acc)
        })
        .collect::<Result<_>>()?;
    // Δ(w·g) = Δ(w)Δ(g) along the prefix-closed basis
    let mut comult: Vec<BTreeMap<(usize, usize), CycScalar>> = Vec::with_capacity(d);
    let mut counit = zero_vector(field, d);
    for (k, w) in basis.iter().enumerate() {
        if w.is_empty() {
            comult.push(BTreeMap::from([((0, 0), CycScalar::one(field))]));
            counit[0] = CycScalar::one(field);
            continue;
        }
        let prefix = Word(w.0[..w.len() - 1].to_vec());
        let g = *w.0.last().expect("nonempty");
        let pi = index[&prefix];
        let mut acc = BTreeMap::new();
        for ((a, b), x) in &comult[pi] {
            for ((c, e), y) in &gen_delta[g] {
                let left = algebra.product(*a, *c);
                let right = algebra.product(*b, *e);
                let xy = x * y;
                for (u, s) in left {
                    let xs = &xy * s;
                    for (v, t) in right {
                        crate::hopf::accumulate(&mut acc, (*u, *v), &(&xs * t));
                    }
                }
            }
        }
        comult.push(acc);
        counit[k] = &counit[pi] * &p.counit[g];
    }
    let comult = comult.into_iter().map(|m| m.into_iter().map(|((i, j), c)| (i, j, c)).collect()).collect();
    Ok(Completion { gens: p.gens.clone(), rewriter, basis, algebra, comult, counit })
}

#[cfg(test)]
mod tests {
    use super::super::parse_presentation;
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const A4PP: &str = "algebra A4pp over cyclotomic(8)
gens g, x
rels g^4 - 1, x^2 - g^2 + 1, g*x + x*g
delta g = g # g
delta x = x # g + 1 # x
counit g = 1, x = 0
";

    #[test]
    fn a4pp_basis() {
        let c = complete_rewriting(&parse_presentation(A4PP).unwrap(), 8).unwrap();
        assert_eq!(c.dim(), 8);
        assert_eq!(c.labels(), vec!["1", "g", "x", "g^2", "gx", "g^3", "g^2x", "g^3x"]);
        let h = c.to_hopf().unwrap();
        assert_eq!(h.dim(), 8);
    }

    #[test]
    fn free_algebra_is_infinite() {
        let src = "algebra F over cyclotomic(8)\ngens x\ndelta x = x # 1 + 1 # x\ncounit x = 0";
        match complete_rewriting(&parse_presentation(src).unwrap(), 5) {
            Err(Error::InfiniteBasis { count, cap }) => assert_eq!((count, cap), (6, 5)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn random_reduction_order_agrees() {
        let c = complete_rewriting(&parse_presentation(A4PP).unwrap(), 8).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let len = rng.gen_range(0..=6);
            let w = Word((0..len).map(|_| rng.gen_range(0..2)).collect());
            let p = NcPoly::monomial(CycScalar::one(c.algebra.field()), w);
            let a = c.rewriter.normal_form(&p);
            let b = c.rewriter.normal_form_with(&p, |n| rng.gen_range(0..n));
            assert_eq!(a, b);
        }
    }
}
