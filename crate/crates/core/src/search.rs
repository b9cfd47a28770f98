//! Backtracking enumeration of homomorphisms between finite algebras.
//!
//! Elements of the source are assigned in ascending order and candidate
//! images are tried in ascending order, so results come out sorted
//! lexicographically by image vector. Every tuple whose arguments are all
//! assigned forces the image of its result, which keeps the tree small for
//! algebras generated by a few elements. Each tried candidate image costs one
//! unit of the budget.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{check_homomorphism, FiniteAlgebra, Mapping, Tuples};
use crate::budget::Meter;
use crate::error::Error;

const UNSET: usize = usize::MAX;

struct Search<'a> {
    src: &'a FiniteAlgebra,
    dst: &'a FiniteAlgebra,
    injective: bool,
    tuples: Vec<Vec<Vec<usize>>>,
    occurrences: Vec<Vec<(usize, usize)>>,
    assign: Vec<usize>,
    used: Vec<bool>,
    trail: Vec<usize>,
    queue: Vec<usize>,
    found: Vec<Mapping>,
}

impl<'a> Search<'a> {
    fn new(src: &'a FiniteAlgebra, dst: &'a FiniteAlgebra, injective: bool) -> Self {
        let sig = src.signature();
        let tuples: Vec<Vec<Vec<usize>>> = (0..sig.len())
            .map(|op| Tuples::new(src.size(), sig.arity(op)).collect())
            .collect();
        let mut occurrences = vec![Vec::new(); src.size()];
        for (op, list) in tuples.iter().enumerate() {
            for (t, args) in list.iter().enumerate() {
                let mut seen: Vec<usize> = args.clone();
                seen.sort_unstable();
                seen.dedup();
                for x in seen {
                    occurrences[x].push((op, t));
                }
            }
        }
        Search {
            src,
            dst,
            injective,
            tuples,
            occurrences,
            assign: vec![UNSET; src.size()],
            used: vec![false; dst.size()],
            trail: Vec::new(),
            queue: Vec::new(),
            found: Vec::new(),
        }
    }

    fn set(&mut self, x: usize, v: usize) -> bool {
        if self.assign[x] != UNSET {
            return self.assign[x] == v;
        }
        if self.injective {
            if self.used[v] {
                return false;
            }
            self.used[v] = true;
        }
        self.assign[x] = v;
        self.trail.push(x);
        self.queue.push(x);
        true
    }

    fn propagate(&mut self) -> bool {
        while let Some(x) = self.queue.pop() {
            for i in 0..self.occurrences[x].len() {
                let (op, t) = self.occurrences[x][i];
                let args = &self.tuples[op][t];
                if args.iter().any(|&a| self.assign[a] == UNSET) {
                    continue;
                }
                let mapped: Vec<usize> = args.iter().map(|&a| self.assign[a]).collect();
                let image = self.dst.apply(op, &mapped);
                let result = self.src.table(op)[t];
                if !self.set(result, image) {
                    self.queue.clear();
                    return false;
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            if self.injective {
                self.used[self.assign[x]] = false;
            }
            self.assign[x] = UNSET;
        }
    }

    fn start(&mut self) -> bool {
        let sig = self.src.signature();
        for op in 0..sig.len() {
            if sig.arity(op) == 0 {
                let (s, d) = (self.src.table(op)[0], self.dst.table(op)[0]);
                if !self.set(s, d) {
                    return false;
                }
            }
        }
        self.propagate()
    }

    fn run(&mut self, meter: &mut Meter<'_>) -> Result<(), Error> {
        let Some(x) = self.assign.iter().position(|&v| v == UNSET) else {
            self.found
                .push(Mapping::new(self.assign.clone(), self.dst.size())?);
            return Ok(());
        };
        for v in 0..self.dst.size() {
            meter.tick()?;
            let mark = self.trail.len();
            if self.set(x, v) && self.propagate() {
                self.run(meter)?;
            }
            self.undo(mark);
        }
        Ok(())
    }
}

/// All homomorphisms `src → dst` (injective ones only when asked), sorted.
pub fn homomorphisms(
    src: &FiniteAlgebra,
    dst: &FiniteAlgebra,
    injective: bool,
    meter: &mut Meter<'_>,
) -> Result<Vec<Mapping>, Error> {
    if src.signature() != dst.signature() {
        return Err(Error::SignatureMismatch);
    }
    let mut search = Search::new(src, dst, injective);
    if search.start() {
        search.run(meter)?;
    }
    Ok(search.found)
}

pub fn enumerate_endomorphisms(
    alg: &FiniteAlgebra,
    meter: &mut Meter<'_>,
) -> Result<Vec<Mapping>, Error> {
    homomorphisms(alg, alg, false, meter)
}

/// Bijective endomorphisms whose inverse is again a homomorphism.
pub fn enumerate_automorphisms(
    alg: &FiniteAlgebra,
    meter: &mut Meter<'_>,
) -> Result<Vec<Mapping>, Error> {
    let mut out = Vec::new();
    for h in homomorphisms(alg, alg, true, meter)? {
        let inv = h
            .inverse()
            .expect("injective self-map of a finite set is bijective");
        if check_homomorphism(&inv, alg, alg)?.holds() {
            out.push(h);
        }
    }
    Ok(out)
}
