//! C-presentations: every relation has the form `x_i = w^-1 x_j w`.

mod dsl;

use thiserror::Error;

use crate::words::{Letter, Word};

pub use dsl::{parse, render, ParseError, ParseErrorKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("generator index {index} outside 1..={generators}")]
    IndexOutOfRange { index: usize, generators: usize },
    #[error("{0} is not a conjugate of a single generator")]
    NotAConjugate(String),
    #[error("inconsistent Hurwitz data: {0}")]
    Hurwitz(String),
}

/// `x_left = conjugator^-1 * x_right * conjugator`.
///
/// The conjugator is stored without a leading power of `x_right`, since such
/// a prefix commutes with `x_right`. With that normalization two relations
/// are equal exactly when their reduced right-hand sides agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CRelation {
    left: usize,
    right: usize,
    conjugator: Word,
}

impl CRelation {
    pub fn new(left: usize, right: usize, conjugator: Word) -> Self {
        let conjugator = match conjugator.letters().first() {
            Some(l) if l.gen == right => Word::from_letters(conjugator.letters()[1..].iter().copied()),
            _ => conjugator,
        };
        CRelation { left, right, conjugator }
    }

    /// `x_left = x_right` with trivial conjugator.
    pub fn identify(left: usize, right: usize) -> Self {
        Self::new(left, right, Word::identity())
    }

    /// `x_gen = w^-1 x_gen w`, i.e. `x_gen` commutes with `w`.
    pub fn commute(gen: usize, w: Word) -> Self {
        Self::new(gen, gen, w)
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn conjugator(&self) -> &Word {
        &self.conjugator
    }

    /// The reduced word `conjugator^-1 x_right conjugator`.
    pub fn rhs(&self) -> Word {
        Word::gen(self.right).conjugate(&self.conjugator)
    }

    /// The relator `x_left^-1 * conjugator^-1 * x_right * conjugator`, reduced.
    pub fn relator(&self) -> Word {
        Word::power_of(self.left, -1).compose(&self.rhs())
    }

    pub fn max_generator(&self) -> usize {
        self.left.max(self.right).max(self.conjugator.max_generator())
    }

    pub fn map_generators(&self, mut f: impl FnMut(usize) -> usize) -> CRelation {
        CRelation::new(f(self.left), f(self.right), self.conjugator.map_generators(f))
    }
}

/// Reads a reduced word of the shape `u x_j u^-1` as `(j, u^-1)`.
pub fn generator_conjugate(w: &Word) -> Option<(usize, Word)> {
    let runs = w.letters();
    if runs.len().is_multiple_of(2) {
        return None;
    }
    let mid = runs.len() / 2;
    if runs[mid].exp != 1 {
        return None;
    }
    let symmetric = (0..mid).all(|i| {
        let a = runs[i];
        let b = runs[runs.len() - 1 - i];
        a.gen == b.gen && a.exp == -b.exp
    });
    if !symmetric {
        return None;
    }
    let prefix = Word::from_letters(runs[..mid].iter().copied());
    Some((runs[mid].gen, prefix.inverse()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CPresentation {
    generator_count: usize,
    relations: Vec<CRelation>,
    hurwitz_degree: Option<usize>,
    hurwitz_word: Option<Word>,
    label: Option<String>,
}

impl CPresentation {
    pub fn new(generator_count: usize, relations: Vec<CRelation>) -> Result<Self, PresentationError> {
        let p = CPresentation {
            generator_count,
            relations,
            hurwitz_degree: None,
            hurwitz_word: None,
            label: None,
        };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<(), PresentationError> {
        let m = self.generator_count;
        let check = |index: usize| {
            if index == 0 || index > m {
                Err(PresentationError::IndexOutOfRange { index, generators: m })
            } else {
                Ok(())
            }
        };
        for r in &self.relations {
            check(r.left)?;
            check(r.right)?;
            if r.conjugator.max_generator() > m {
                check(r.conjugator.max_generator())?;
            }
        }
        match (&self.hurwitz_degree, &self.hurwitz_word) {
            (None, Some(_)) => {
                return Err(PresentationError::Hurwitz("central word without a degree".into()))
            }
            (Some(d), None) if *d != m => {
                return Err(PresentationError::Hurwitz(format!(
                    "degree {d} differs from {m} generators and no central word is recorded"
                )))
            }
            (Some(d), Some(w)) => {
                if w.max_generator() > m {
                    check(w.max_generator())?;
                }
                if w.exponent_sum() != *d as i64 {
                    return Err(PresentationError::Hurwitz(format!(
                        "central word {w} has exponent sum {} but degree is {d}",
                        w.exponent_sum()
                    )));
                }
            }
            _ => {}
        }
        Ok(())
    }

    pub fn generator_count(&self) -> usize {
        self.generator_count
    }

    pub fn relations(&self) -> &[CRelation] {
        &self.relations
    }

    pub fn hurwitz_degree(&self) -> Option<usize> {
        self.hurwitz_degree
    }

    /// The central quasipositive word behind a Hurwitz degree that differs
    /// from the generator count.
    pub fn hurwitz_word(&self) -> Option<&Word> {
        self.hurwitz_word.as_ref()
    }

    /// True when the Hurwitz structure is the product `x1...xm` of all
    /// generators.
    pub fn is_standard_hurwitz(&self) -> bool {
        self.hurwitz_degree == Some(self.generator_count) && self.hurwitz_word.is_none()
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    /// Records a Hurwitz degree. With `word = None` the degree must equal the
    /// generator count; otherwise `word` is the central quasipositive word
    /// and its exponent sum must equal `degree`. Centrality is the caller's
    /// obligation.
    pub fn with_hurwitz(mut self, degree: usize, word: Option<Word>) -> Result<Self, PresentationError> {
        self.hurwitz_degree = Some(degree);
        self.hurwitz_word = word;
        self.validate()?;
        Ok(self)
    }

    pub fn without_hurwitz(mut self) -> Self {
        self.hurwitz_degree = None;
        self.hurwitz_word = None;
        self
    }

    pub fn push_relation(&mut self, r: CRelation) -> Result<(), PresentationError> {
        self.relations.push(r);
        if let Err(e) = self.validate() {
            self.relations.pop();
            return Err(e);
        }
        Ok(())
    }

    /// Relators in relation order; trivial relations give the empty word.
    pub fn relators(&self) -> Vec<Word> {
        self.relations.iter().map(CRelation::relator).collect()
    }

    /// Number of conjugacy classes of generators forced by the relations,
    /// which is the rank of the abelianization.
    pub fn components(&self) -> usize {
        let mut uf = UnionFind::new(self.generator_count);
        for r in &self.relations {
            uf.union(r.left - 1, r.right - 1);
        }
        uf.class_count()
    }

    /// Generator classes, each sorted, listed by smallest member.
    pub fn component_classes(&self) -> Vec<Vec<usize>> {
        let mut uf = UnionFind::new(self.generator_count);
        for r in &self.relations {
            uf.union(r.left - 1, r.right - 1);
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; self.generator_count];
        for g in 0..self.generator_count {
            let root = uf.find(g);
            if slot[root] == usize::MAX {
                slot[root] = classes.len();
                classes.push(Vec::new());
            }
            classes[slot[root]].push(g + 1);
        }
        classes
    }

    /// Adds `x_i = y^-1 x_i y` with `y = x1...xm` for every generator whose
    /// relation is not already present, and records degree `m`.
    ///
    /// The caller asserts that `y` is central in the presented group;
    /// otherwise the result presents a different group.
    pub fn ensure_hurwitz(&self) -> CPresentation {
        if self.is_standard_hurwitz() {
            return self.clone();
        }
        let m = self.generator_count;
        let y = Word::product_range(1, m);
        let mut out = self.clone();
        for i in 1..=m {
            let r = CRelation::commute(i, y.clone());
            if !out.relations.contains(&r) {
                out.relations.push(r);
            }
        }
        out.hurwitz_degree = Some(m);
        out.hurwitz_word = None;
        out
    }

    /// Applies a generator permutation `perm[i-1] = new index of x_i`.
    pub fn relabel(&self, perm: &[usize]) -> Result<CPresentation, PresentationError> {
        assert_eq!(perm.len(), self.generator_count, "permutation length");
        let map = |g: usize| perm[g - 1];
        let relations = self.relations.iter().map(|r| r.map_generators(map)).collect();
        let mut out = CPresentation::new(self.generator_count, relations)?;
        out.label = self.label.clone();
        if let Some(d) = self.hurwitz_degree {
            let word = match &self.hurwitz_word {
                Some(w) => Some(w.map_generators(map)),
                None if d == self.generator_count => {
                    // x1...xm is renamed as a word; record it explicitly
                    let y = Word::from_letters((1..=d).map(|g| Letter::new(map(g), 1)));
                    (y != Word::product_range(1, d)).then_some(y)
                }
                None => None,
            };
            out = out.with_hurwitz(d, word)?;
        }
        Ok(out)
    }

    /// Same presentation with relations reordered.
    pub fn with_relation_order(&self, order: &[usize]) -> CPresentation {
        let mut out = self.clone();
        out.relations = order.iter().map(|&i| self.relations[i].clone()).collect();
        out
    }
}

struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), size: vec![1; n] }
    }

    fn find(&mut self, mut x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] { (ra, rb) } else { (rb, ra) };
        self.parent[small] = big;
        self.size[big] += self.size[small];
    }

    fn class_count(&mut self) -> usize {
        (0..self.parent.len()).filter(|&x| self.find(x) == x).count()
    }
}
