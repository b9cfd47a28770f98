//! Naive reference implementations for cross-checking.
//!
//! Nothing here prunes or propagates. The only shared code is the data
//! types and the product/table lookups.

use alloc::vec::Vec;

use crate::algebra::{ElemSet, FiniteAlgebra, Mapping, Tuples};
use crate::budget::Meter;
use crate::error::Error;
use crate::generation::{GeneratingTuple, Layered};
use crate::representation::{validate_morphism, RepMorphism, Representation};

/// Carriers above this size are refused by the subset sweeps.
pub const MAX_SWEEP_SIZE: usize = 20;

fn mask_to_set(mask: u64) -> ElemSet {
    (0..64).filter(|&i| mask >> i & 1 == 1).collect()
}

fn set_to_mask(set: &ElemSet) -> u64 {
    set.iter().fold(0, |m, &i| m | 1 << i)
}

fn closed_under_ops(alg: &FiniteAlgebra, mask: u64) -> bool {
    let sig = alg.signature();
    let members: Vec<usize> = (0..alg.size()).filter(|&i| mask >> i & 1 == 1).collect();
    (0..sig.len()).all(|op| {
        Tuples::new(members.len(), sig.arity(op)).all(|pick| {
            let args: Vec<usize> = pick.iter().map(|&k| members[k]).collect();
            mask >> alg.apply(op, &args) & 1 == 1
        })
    })
}

/// For each layer, the intersection of every subset that contains the
/// seed, is closed under the layer operations and under the actions of
/// the layer below's result. Layer 1 is the whole algebra.
pub fn brute_closure<L: Layered + ?Sized>(
    t: &L,
    x: &GeneratingTuple,
    meter: &mut Meter<'_>,
) -> Result<Vec<ElemSet>, Error> {
    if x.sets().len() + 1 != t.layer_count() {
        return Err(Error::SizeMismatch {
            expected: t.layer_count() - 1,
            found: x.sets().len(),
        });
    }
    let mut out: Vec<ElemSet> = alloc::vec![(0..t.layer(1).size()).collect()];
    for i in 2..=t.layer_count() {
        let alg = t.layer(i);
        let n = alg.size();
        if n > MAX_SWEEP_SIZE {
            return Err(Error::BudgetExceeded {
                spent: meter.spent(),
                limit: 1 << MAX_SWEEP_SIZE,
            });
        }
        let rep = t.action_into(i - 1);
        let seed = set_to_mask(x.get(i));
        let actors = &out[i - 2];
        let mut meet: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for mask in 0..1u64 << n {
            meter.tick()?;
            if mask & seed != seed || !closed_under_ops(alg, mask) {
                continue;
            }
            let stable = actors.iter().all(|&a| {
                (0..n)
                    .filter(|&m| mask >> m & 1 == 1)
                    .all(|m| mask >> rep.act(a, m) & 1 == 1)
            });
            if stable {
                meet &= mask;
            }
        }
        out.push(mask_to_set(meet));
    }
    Ok(out)
}

/// Every tuple of subsets whose brute closure is everything.
pub fn enumerate_generating_tuples<L: Layered + ?Sized>(
    t: &L,
    meter: &mut Meter<'_>,
) -> Result<Vec<GeneratingTuple>, Error> {
    let sizes: Vec<usize> = (2..=t.layer_count()).map(|i| t.layer(i).size()).collect();
    if sizes.iter().any(|&n| n > MAX_SWEEP_SIZE) {
        return Err(Error::BudgetExceeded {
            spent: meter.spent(),
            limit: 1 << MAX_SWEEP_SIZE,
        });
    }
    let counts: Vec<usize> = sizes.iter().map(|&n| 1usize << n).collect();
    let mut out = Vec::new();
    let mut choice = alloc::vec![0usize; counts.len()];
    loop {
        meter.tick()?;
        let tuple = GeneratingTuple::new(choice.iter().map(|&m| mask_to_set(m as u64)).collect());
        let closed = brute_closure(t, &tuple, meter)?;
        if closed
            .iter()
            .zip(1..)
            .all(|(set, i)| set.len() == t.layer(i).size())
        {
            out.push(tuple);
        }
        let mut k = counts.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < counts[k] {
                break;
            }
            choice[k] = 0;
        }
    }
}

fn all_maps(from: usize, to: usize) -> impl Iterator<Item = Mapping> {
    Tuples::new(to, from)
        .map(move |image| Mapping::new(image, to).expect("entries below target size"))
}

/// Every `(r, R)` passing [`validate_morphism`], by trying all map pairs.
/// Mismatched signatures give no morphisms.
pub fn exhaustive_morphism_search(
    src: &Representation,
    dst: &Representation,
    meter: &mut Meter<'_>,
) -> Result<Vec<RepMorphism>, Error> {
    if src.domain().signature() != dst.domain().signature()
        || src.space().signature() != dst.space().signature()
    {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for r in all_maps(src.domain().size(), dst.domain().size()) {
        for big_r in all_maps(src.space().size(), dst.space().size()) {
            meter.tick()?;
            let m = RepMorphism::new(r.clone(), big_r);
            if validate_morphism(&m, src, dst)?.holds() {
                out.push(m);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{OpDecl, Signature};
    use crate::representation::{Interp, OpInterpretation};
    use alloc::vec;

    fn zn(n: usize) -> FiniteAlgebra {
        FiniteAlgebra::from_fn(
            Signature::new(vec![OpDecl::new("+", 2)]).unwrap(),
            n,
            |_, a| (a[0] + a[1]) % n,
        )
    }

    fn translations(n: usize) -> Representation {
        Representation::from_action(
            zn(n),
            FiniteAlgebra::set(n),
            OpInterpretation::new(vec![Interp::Compose]),
            |a, m| (a + m) % n,
        )
        .unwrap()
    }

    #[test]
    fn brute_closure_of_translations() {
        let rep = translations(3);
        let one = GeneratingTuple::single([0].into());
        assert_eq!(
            brute_closure(&rep, &one, &mut Meter::unlimited()).unwrap()[1],
            ElemSet::from([0, 1, 2])
        );
        let none = GeneratingTuple::single(ElemSet::new());
        assert!(brute_closure(&rep, &none, &mut Meter::unlimited()).unwrap()[1].is_empty());
    }

    #[test]
    fn generating_tuples_of_translations() {
        let rep = translations(3);
        let all = enumerate_generating_tuples(&rep, &mut Meter::unlimited()).unwrap();
        assert_eq!(all.len(), 7);
        assert!(all.iter().all(|x| !x.get(2).is_empty()));
    }

    #[test]
    fn morphisms_between_translation_reps() {
        let rep = translations(3);
        let found = exhaustive_morphism_search(&rep, &rep, &mut Meter::unlimited()).unwrap();
        assert!(found.contains(&RepMorphism::identity(&rep)));
        // h ∈ End(Z3) (3 choices) times base point image (3 choices)
        assert_eq!(found.len(), 9);
        let other = Representation::from_action(
            FiniteAlgebra::set(1),
            FiniteAlgebra::set(1),
            OpInterpretation::new(vec![]),
            |_, _| 0,
        )
        .unwrap();
        assert!(
            exhaustive_morphism_search(&rep, &other, &mut Meter::unlimited())
                .unwrap()
                .is_empty()
        );
    }

    #[test]
    fn budget_is_enforced() {
        let rep = translations(3);
        let mut meter = crate::budget::Budget::new(5).meter();
        assert!(matches!(
            exhaustive_morphism_search(&rep, &rep, &mut meter),
            Err(Error::BudgetExceeded { .. })
        ));
    }
}
