//! Named instances and seeded random corpora for tests.

use rand::seq::SliceRandom;
pub use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use ualg_core::algebra::{ElemSet, FiniteAlgebra, Mapping, OpDecl, Signature, Tuples};
use ualg_core::budget::Meter;
use ualg_core::representation::{Interp, OpInterpretation, Representation};
use ualg_core::search::enumerate_endomorphisms;
use ualg_core::tower::Tower;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn sig(ops: &[(&str, usize)]) -> Signature {
    Signature::new(ops.iter().map(|&(s, k)| OpDecl::new(s, k)).collect()).expect("distinct symbols")
}

/// `(Zₙ, +)`, optionally with the constant 0.
pub fn cyclic(n: usize, with_zero: bool) -> FiniteAlgebra {
    let s = if with_zero {
        sig(&[("+", 2), ("0", 0)])
    } else {
        sig(&[("+", 2)])
    };
    FiniteAlgebra::from_fn(s, n, |op, a| if op == 0 { (a[0] + a[1]) % n } else { 0 })
}

/// `Zₙ` acting on a bare n-set by translation.
pub fn translations(n: usize) -> Representation {
    Representation::from_action(
        cyclic(n, false),
        FiniteAlgebra::set(n),
        OpInterpretation::new(vec![Interp::Compose]),
        |a, m| (a + m) % n,
    )
    .expect("translations are a representation")
}

/// A group acting on itself by left multiplication through its binary op 0.
pub fn regular(group: FiniteAlgebra) -> Representation {
    let modes = (0..group.signature().len())
        .map(|op| match group.signature().arity(op) {
            0 => Interp::Identity,
            1 => Interp::Inverse,
            _ => Interp::Compose,
        })
        .collect();
    let space = FiniteAlgebra::set(group.size());
    let g = group.clone();
    Representation::from_action(group, space, OpInterpretation::new(modes), move |a, m| {
        g.apply(0, &[a, m])
    })
    .expect("left multiplication of a group")
}

/// Small groups whose regular representations are single transitive.
pub fn small_groups() -> Vec<FiniteAlgebra> {
    let mut out: Vec<FiniteAlgebra> = (1..=4).map(|n| cyclic(n, false)).collect();
    out.push(
        cyclic(2, false)
            .product(&cyclic(2, false))
            .expect("same signature"),
    );
    out
}

/// GF(4) as `0, 1, ω, ω²` = `0, 1, 2, 3`; addition is XOR on the bit pattern.
pub fn gf4_mul(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 {
        return 0;
    }
    // log: 1 ↦ 0, ω ↦ 1, ω² ↦ 2
    [1, 2, 3][(a - 1 + b - 1) % 3]
}

pub fn gf2() -> FiniteAlgebra {
    FiniteAlgebra::from_fn(
        sig(&[("+", 2), ("*", 2), ("0", 0), ("1", 0)]),
        2,
        |op, a| match op {
            0 => a[0] ^ a[1],
            1 => a[0] & a[1],
            2 => 0,
            _ => 1,
        },
    )
}

/// GF(4) without the constant 1, so scalar 0 is an endomorphism.
pub fn gf4() -> FiniteAlgebra {
    FiniteAlgebra::from_fn(sig(&[("+", 2), ("*", 2), ("0", 0)]), 4, |op, a| match op {
        0 => a[0] ^ a[1],
        1 => gf4_mul(a[0], a[1]),
        _ => 0,
    })
}

/// GF(4)² as an abelian group; `(a, b)` has index `4a + b`.
pub fn gf4_plane() -> FiniteAlgebra {
    FiniteAlgebra::from_fn(sig(&[("+", 2), ("0", 0)]), 16, |op, v| {
        if op == 0 {
            v[0] ^ v[1]
        } else {
            0
        }
    })
}

pub fn scale(beta: usize, v: usize) -> usize {
    gf4_mul(beta, v / 4) * 4 + gf4_mul(beta, v % 4)
}

/// GF(2) acting on GF(4) by scalars, GF(4) acting on GF(4)² by scalars.
pub fn gf_tower() -> Tower {
    let f12 = Representation::from_action(
        gf2(),
        gf4(),
        OpInterpretation::new(vec![
            Interp::Pointwise(0),
            Interp::Compose,
            Interp::Pointwise(2),
            Interp::Identity,
        ]),
        |c, x| if c == 0 { 0 } else { x },
    )
    .expect("GF(2) scalars");
    let f23 = Representation::from_action(
        gf4(),
        gf4_plane(),
        OpInterpretation::new(vec![
            Interp::Pointwise(0),
            Interp::Compose,
            Interp::Pointwise(1),
        ]),
        scale,
    )
    .expect("GF(4) scalars");
    Tower::new(vec![f12, f23]).expect("chained")
}

/// Z₂ acts on `(Z₃, +, 0)` by ±1 and `(Z₃, +, 0)` acts on a 3-set by translation.
/// Both actions are effective; the carrier extension of the skip action is not.
pub fn sign_then_translate() -> Tower {
    let lower = Representation::from_action(
        cyclic(2, false),
        cyclic(3, true),
        OpInterpretation::new(vec![Interp::Compose]),
        |s, x| {
            if s == 0 {
                x
            } else {
                (3 - x) % 3
            }
        },
    )
    .expect("sign action");
    let upper = Representation::from_action(
        cyclic(3, true),
        FiniteAlgebra::set(3),
        OpInterpretation::new(vec![Interp::Compose, Interp::Identity]),
        |a, m| (a + m) % 3,
    )
    .expect("translation action");
    Tower::new(vec![lower, upper]).expect("chained")
}

pub fn random_subset<R: Rng>(rng: &mut R, n: usize) -> ElemSet {
    (0..n).filter(|_| rng.gen_bool(0.4)).collect()
}

fn random_table<R: Rng>(rng: &mut R, n: usize, arity: usize) -> Vec<usize> {
    (0..ualg_core::algebra::table_len(n, arity))
        .map(|_| rng.gen_range(0..n))
        .collect()
}

/// A small algebra with at most two operations of arity at most two.
pub fn random_space<R: Rng>(rng: &mut R, max_size: usize) -> FiniteAlgebra {
    let n = rng.gen_range(1..=max_size);
    match rng.gen_range(0..6) {
        0 => FiniteAlgebra::set(n),
        1 => cyclic(n, rng.gen_bool(0.5)),
        2 => FiniteAlgebra::new(sig(&[("u", 1)]), n, vec![random_table(rng, n, 1)])
            .expect("random unary"),
        3 => FiniteAlgebra::new(sig(&[("b", 2)]), n, vec![random_table(rng, n, 2)])
            .expect("random binary"),
        4 if n >= 4 => cyclic(2, false)
            .product(&cyclic(2, false))
            .expect("same signature"),
        _ => {
            let c = rng.gen_range(0..n);
            let u = random_table(rng, n, 1);
            FiniteAlgebra::new(sig(&[("u", 1), ("c", 0)]), n, vec![u, vec![c]])
                .expect("random pointed unary")
        }
    }
}

/// Which Ω₁ operations a transformation algebra carries.
#[derive(Debug, Clone, Copy, Default)]
pub struct Modes {
    /// Adds the nullary δ.
    pub identity: bool,
    /// Adds a binary op interpreted pointwise through this space op.
    pub pointwise: Option<usize>,
}

/// The algebra of transformations generated by `gens` under the chosen
/// modes, acting on `space` by inclusion. `None` when the closure exceeds
/// `max_size` or leaves the endomorphisms of `space`.
pub fn transformation_algebra(
    space: &FiniteAlgebra,
    gens: &[Mapping],
    modes: Modes,
    max_size: usize,
) -> Option<Representation> {
    let n = space.size();
    let mut elems: Vec<Mapping> = Vec::new();
    let push = |t: Mapping, elems: &mut Vec<Mapping>| {
        if !elems.contains(&t) {
            elems.push(t);
        }
    };
    for g in gens {
        push(g.clone(), &mut elems);
    }
    if modes.identity {
        push(Mapping::identity(n), &mut elems);
    }
    loop {
        let before = elems.len();
        let snapshot = elems.clone();
        for f in &snapshot {
            for g in &snapshot {
                push(f.after(g), &mut elems);
                if let Some(w) = modes.pointwise {
                    let image = (0..n)
                        .map(|m| space.apply(w, &[f.apply(m), g.apply(m)]))
                        .collect();
                    push(Mapping::new(image, n).ok()?, &mut elems);
                }
            }
        }
        if elems.len() > max_size {
            return None;
        }
        if elems.len() == before {
            break;
        }
    }
    if elems.is_empty() {
        return None;
    }
    let pos = |t: &Mapping| elems.iter().position(|e| e == t).expect("closed");
    let mut ops = vec![OpDecl::new("*", 2)];
    let mut modes_list = vec![Interp::Compose];
    let mut tables = vec![Tuples::new(elems.len(), 2)
        .map(|p| pos(&elems[p[0]].after(&elems[p[1]])))
        .collect::<Vec<_>>()];
    if let Some(w) = modes.pointwise {
        ops.push(OpDecl::new("+", 2));
        modes_list.push(Interp::Pointwise(w));
        tables.push(
            Tuples::new(elems.len(), 2)
                .map(|p| {
                    let image = (0..n)
                        .map(|m| space.apply(w, &[elems[p[0]].apply(m), elems[p[1]].apply(m)]))
                        .collect();
                    pos(&Mapping::new(image, n).expect("in range"))
                })
                .collect(),
        );
    }
    if modes.identity {
        ops.push(OpDecl::new("e", 0));
        modes_list.push(Interp::Identity);
        tables.push(vec![pos(&Mapping::identity(n))]);
    }
    let domain = FiniteAlgebra::new(Signature::new(ops).ok()?, elems.len(), tables).ok()?;
    Representation::new(
        domain,
        space.clone(),
        OpInterpretation::new(modes_list),
        elems,
    )
    .ok()
}

/// Pulls `rep` back along the projection `A × B → A` for a random `B` of
/// the same signature, which makes it non-effective when `|B| > 1`.
pub fn inflate<R: Rng>(rng: &mut R, rep: &Representation, factor: usize) -> Representation {
    let s = rep.domain().signature().clone();
    let tables = (0..s.len())
        .map(|op| random_table(rng, factor, s.arity(op)))
        .collect();
    let b = FiniteAlgebra::new(s, factor, tables).expect("random tables are total");
    let product = rep.domain().product(&b).expect("same signature");
    let proj = Mapping::new(
        (0..product.size()).map(|x| x / factor).collect(),
        rep.domain().size(),
    )
    .expect("in range");
    Representation::pull_back(rep, product, &proj).expect("projection is a homomorphism")
}

fn random_modes<R: Rng>(rng: &mut R, space: &FiniteAlgebra) -> Modes {
    let binary: Vec<usize> = (0..space.signature().len())
        .filter(|&op| space.signature().arity(op) == 2)
        .collect();
    Modes {
        identity: rng.gen_bool(0.4),
        pointwise: if rng.gen_bool(0.4) {
            binary.choose(rng).copied()
        } else {
            None
        },
    }
}

/// A random valid representation of an algebra of transformations of
/// `space`, inflated to a non-effective one with probability `p_inflate`.
pub fn random_representation_on<R: Rng>(
    rng: &mut R,
    space: &FiniteAlgebra,
    max_domain: usize,
    p_inflate: f64,
) -> Option<Representation> {
    let endos = enumerate_endomorphisms(space, &mut Meter::unlimited()).ok()?;
    let k = rng.gen_range(1..=3.min(endos.len()));
    let gens: Vec<Mapping> = endos.choose_multiple(rng, k).cloned().collect();
    let rep = transformation_algebra(space, &gens, random_modes(rng, space), max_domain)?;
    if rep.domain().size() * 2 <= max_domain && rng.gen_bool(p_inflate) {
        Some(inflate(rng, &rep, 2))
    } else {
        Some(rep)
    }
}

/// A random valid representation with `|A| ≤ max_domain`, `|M| ≤ max_space`.
pub fn random_representation<R: Rng>(
    rng: &mut R,
    max_domain: usize,
    max_space: usize,
) -> Representation {
    loop {
        let space = random_space(rng, max_space);
        if let Some(rep) = random_representation_on(rng, &space, max_domain, 0.3) {
            // one-element domains are rare draws, not the bulk of the corpus
            if rep.domain().size() > 1 || rng.gen_bool(0.2) {
                return rep;
            }
        }
    }
}

/// A random valid three-layer tower, built top-down.
pub fn random_tower<R: Rng>(rng: &mut R, p_inflate: f64) -> Tower {
    loop {
        let top = random_space(rng, 4);
        if top.size() == 1 && !rng.gen_bool(0.2) {
            continue;
        }
        let Some(upper) = random_representation_on(rng, &top, 6, p_inflate) else {
            continue;
        };
        let Some(lower) = random_representation_on(rng, upper.domain(), 6, p_inflate) else {
            continue;
        };
        if lower.domain().size() == 1 && !rng.gen_bool(0.2) {
            continue;
        }
        if let Ok(t) = Tower::new(vec![lower, upper]) {
            return t;
        }
    }
}
