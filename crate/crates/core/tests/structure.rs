//! Shapes of complements and failures beyond the main theorems.

use chopped::algorithm::{find_c_failures, m2_closed_form, max_complement_vector};
use chopped::chopped::{Role, SuborderKind};
use chopped::corpus::{corpus, three_chain};
use chopped::oracle::{complements_among, enumerate_ideals, sectional_complements_bruteforce, DEFAULT_SIZE_CAP};
use chopped::vector::{compatible_at, vector_leq};
use chopped::{ChoppedLattice, Poset, Vector};

fn vec(m: &ChoppedLattice, s: &str) -> Vector {
    Vector::parse(m, s).unwrap()
}

/// Complements in `Id M` may use elements the block-wise maximum excludes,
/// because joins propagate across shared atoms.
#[test]
fn complements_need_not_lie_below_m() {
    let m = ChoppedLattice::build(&three_chain()).unwrap();
    let u = vec(&m, "p>q=p1,q>r=r1");
    let v = vec(&m, "p>q=p(q),q>r=q(r)");
    let top = max_complement_vector(&m, &u, &v).unwrap();
    assert_eq!(top.format(&m), "p>q=q,q>r=q1");
    let found = sectional_complements_bruteforce(&m, &u, &v, DEFAULT_SIZE_CAP).unwrap();
    let outside = vec(&m, "p>q=q2,q>r=r2");
    assert!(found.contains(&outside));
    assert!(!vector_leq(&outside, &top));
}

/// Complements that are also block-wise complements lie below `m`.
#[test]
fn blockwise_complements_lie_below_m() {
    for (name, poset) in corpus(6, 3) {
        let m = ChoppedLattice::build(&poset).unwrap();
        let ideals = enumerate_ideals(&m, DEFAULT_SIZE_CAP).unwrap();
        for u in &ideals {
            for v in ideals.iter().filter(|v| vector_leq(u, v)) {
                let top = max_complement_vector(&m, u, v).unwrap();
                for s in complements_among(&m, &ideals, u, v) {
                    let local = (0..m.block_count()).all(|k| {
                        s.get(k).meet(u.get(k)) == Role::Zero && s.get(k).join(u.get(k)) == v.get(k)
                    });
                    if local {
                        assert!(vector_leq(&s, &top), "{name}");
                    }
                }
            }
        }
    }
}

/// A step-2 cut can leave a same-stem sibling incompatible without it
/// agreeing with `m`, so it is cut along with the failure rather than as one.
#[test]
fn same_stem_sibling_after_v_cut() {
    let poset = Poset::new(&["a", "b", "c", "d", "e"], &[("b", "a"), ("c", "b"), ("d", "c"), ("e", "c")]).unwrap();
    let m = ChoppedLattice::build(&poset).unwrap();
    let u = vec(&m, "b>a=0,c>b=0,d>c=c2,e>c=c2");
    let v = vec(&m, "b>a=b1,c>b=c(b),d>c=d(c),e>c=c");
    let target = max_complement_vector(&m, &u, &v).unwrap();
    let m2 = m2_closed_form(&m, &u, &v).unwrap();
    assert_eq!(target.format(&m), "b>a=b1,c>b=c(b),d>c=d1,e>c=c1");
    assert_eq!(m2.format(&m), "b>a=b1,c>b=c(b),d>c=d1,e>c=0");
    let failures = find_c_failures(&m, &m2, &target).unwrap();
    let names: Vec<[String; 3]> = failures.iter().map(|f| f.suborder.names(&poset)).collect();
    assert_eq!(names, [["d", "c", "b"].map(String::from)]);
    let sibling = m
        .suborders()
        .iter()
        .find(|s| s.kind == SuborderKind::C && s.names(&poset) == ["e", "c", "b"].map(String::from))
        .unwrap();
    assert!(!compatible_at(&m, &m2, sibling));
}
