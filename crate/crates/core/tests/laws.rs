//! Algebraic laws of the four-valued connectives, checked by enumeration.

use diairesis_core::TruthValue4::{self, Both as B, False as F, Neither as N, True as T};

const ALL: [TruthValue4; 4] = TruthValue4::ALL;

fn pairs() -> impl Iterator<Item = (TruthValue4, TruthValue4)> {
    ALL.into_iter()
        .flat_map(|a| ALL.into_iter().map(move |b| (a, b)))
}

fn triples() -> impl Iterator<Item = (TruthValue4, TruthValue4, TruthValue4)> {
    pairs().flat_map(|(a, b)| ALL.into_iter().map(move |c| (a, b, c)))
}

#[test]
fn commutative() {
    for (a, b) in pairs() {
        assert_eq!(a.conj(b), b.conj(a));
        assert_eq!(a.disj(b), b.disj(a));
    }
}

#[test]
fn associative() {
    assert_eq!(triples().count(), 64);
    for (a, b, c) in triples() {
        assert_eq!(a.conj(b).conj(c), a.conj(b.conj(c)), "{a} & {b} & {c}");
        assert_eq!(a.disj(b).disj(c), a.disj(b.disj(c)), "{a} | {b} | {c}");
    }
}

#[test]
fn idempotent_and_involutive() {
    for v in ALL {
        assert_eq!(v.conj(v), v);
        assert_eq!(v.disj(v), v);
        assert_eq!(v.neg().neg(), v);
    }
}

#[test]
fn de_morgan() {
    for (a, b) in pairs() {
        assert_eq!(a.conj(b).neg(), a.neg().disj(b.neg()));
        assert_eq!(a.disj(b).neg(), a.neg().conj(b.neg()));
    }
}

#[test]
fn neither_is_identity() {
    for v in ALL {
        assert_eq!(N.conj(v), v);
        assert_eq!(v.conj(N), v);
        assert_eq!(N.disj(v), v);
        assert_eq!(v.disj(N), v);
    }
}

#[test]
fn chain_min_max_off_neither() {
    // F < B < T
    let rank = |v: TruthValue4| [F, B, T].iter().position(|&x| x == v).unwrap();
    for a in [F, B, T] {
        for b in [F, B, T] {
            let lo = if rank(a) <= rank(b) { a } else { b };
            let hi = if rank(a) >= rank(b) { a } else { b };
            assert_eq!(a.conj(b), lo);
            assert_eq!(a.disj(b), hi);
        }
    }
}

#[test]
fn distributivity_fails() {
    let lhs = T.conj(N.disj(F));
    let rhs = T.conj(N).disj(T.conj(F));
    assert_eq!(lhs, F);
    assert_eq!(rhs, T);
    assert_ne!(lhs, rhs);
}

#[test]
fn not_belnap() {
    assert_eq!(B.conj(N), B);
    assert_eq!(B.disj(N), B);
}

#[test]
fn classical_restriction_is_boolean() {
    for a in [false, true] {
        assert_eq!(
            TruthValue4::embed_classical(!a),
            TruthValue4::embed_classical(a).neg()
        );
        for b in [false, true] {
            let (x, y) = (TruthValue4::from(a), TruthValue4::from(b));
            assert_eq!(x.conj(y), TruthValue4::from(a && b));
            assert_eq!(x.disj(y), TruthValue4::from(a || b));
            assert_eq!((x & y).as_classical(), Some(a && b));
            assert_eq!((x | y).as_classical(), Some(a || b));
        }
    }
    assert_eq!(TruthValue4::embed_classical(true), T);
    assert_eq!(TruthValue4::embed_classical(false), F);
}

#[test]
fn knowledge_lattice_is_a_lattice() {
    for (a, b) in pairs() {
        let (j, m) = (a.knowledge_join(b), a.knowledge_meet(b));
        assert!(a.knowledge_leq(j) && b.knowledge_leq(j));
        assert!(m.knowledge_leq(a) && m.knowledge_leq(b));
        // least upper bound / greatest lower bound
        for c in ALL {
            if a.knowledge_leq(c) && b.knowledge_leq(c) {
                assert!(j.knowledge_leq(c));
            }
            if c.knowledge_leq(a) && c.knowledge_leq(b) {
                assert!(c.knowledge_leq(m));
            }
        }
        assert_eq!(a.knowledge_leq(b) && b.knowledge_leq(a), a == b);
    }
}
