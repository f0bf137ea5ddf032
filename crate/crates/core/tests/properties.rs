use proptest::prelude::*;

use chopped::algorithm::run_algorithm;
use chopped::corpus::random_poset;
use chopped::oracle::{complements_among, enumerate_ideals, DEFAULT_SIZE_CAP};
use chopped::vector::{
    atoms_below, ideal_from_vector, is_compatible, vector_from_ideal, vector_join, vector_join_all,
    vector_leq, vector_meet,
};
use chopped::{s1960, ChoppedLattice, Lcg, Poset, Strategy, Vector};

fn setup(seed: u64) -> (ChoppedLattice, Vec<Vector>) {
    let poset = random_poset(&mut Lcg::new(seed), 5);
    let m = ChoppedLattice::build(&poset).unwrap();
    let ideals = enumerate_ideals(&m, DEFAULT_SIZE_CAP).unwrap();
    (m, ideals)
}

fn pick(ideals: &[Vector], i: usize) -> Vector {
    ideals[i % ideals.len()].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn meet_in_m_is_a_semilattice(seed: u64, a: usize, b: usize, c: usize) {
        let m = ChoppedLattice::build(&random_poset(&mut Lcg::new(seed), 5)).unwrap();
        let (a, b, c) = (a % m.len(), b % m.len(), c % m.len());
        prop_assert_eq!(m.meet(a, b), m.meet(b, a));
        prop_assert_eq!(m.meet(a, a), a);
        prop_assert_eq!(m.meet(m.meet(a, b), c), m.meet(a, m.meet(b, c)));
        let x = m.meet(a, b);
        prop_assert!(m.leq(x, a) && m.leq(x, b));
        for z in 0..m.len() {
            if m.leq(z, a) && m.leq(z, b) {
                prop_assert!(m.leq(z, x));
            }
        }
    }

    #[test]
    fn ideals_form_a_lattice(seed: u64, i: usize, j: usize, k: usize) {
        let (m, ideals) = setup(seed);
        let (a, b, c) = (pick(&ideals, i), pick(&ideals, j), pick(&ideals, k));
        let meet = vector_meet(&m, &a, &b).unwrap();
        let join = vector_join(&m, &a, &b).unwrap();
        prop_assert!(is_compatible(&m, &meet).unwrap() && is_compatible(&m, &join).unwrap());
        prop_assert!(ideals.contains(&meet) && ideals.contains(&join));
        prop_assert_eq!(&join, &vector_join(&m, &b, &a).unwrap());
        prop_assert_eq!(vector_meet(&m, &a, &join).unwrap(), a.clone());
        prop_assert_eq!(vector_join(&m, &a, &meet).unwrap(), a.clone());
        prop_assert_eq!(
            vector_join(&m, &vector_join(&m, &a, &b).unwrap(), &c).unwrap(),
            vector_join(&m, &a, &vector_join(&m, &b, &c).unwrap()).unwrap()
        );
        // the join is the least ideal above both
        for x in ideals.iter().filter(|x| vector_leq(&a, x) && vector_leq(&b, x)) {
            prop_assert!(vector_leq(&join, x));
        }
    }

    #[test]
    fn ideals_are_joins_of_their_atoms(seed: u64, i: usize) {
        let (m, ideals) = setup(seed);
        let c = pick(&ideals, i);
        let atoms: Vec<Vector> = atoms_below(&m, &c).iter().map(|&a| Vector::of_atom(&m, a)).collect();
        prop_assert_eq!(vector_join_all(&m, &atoms), c);
    }

    #[test]
    fn ideal_vector_round_trip(seed: u64, i: usize) {
        let (m, ideals) = setup(seed);
        let c = pick(&ideals, i);
        let ideal = ideal_from_vector(&m, &c).unwrap();
        prop_assert_eq!(vector_from_ideal(&m, &ideal).unwrap(), c);
    }

    #[test]
    fn literal_round_trip(seed: u64, i: usize) {
        let (m, ideals) = setup(seed);
        let c = pick(&ideals, i);
        prop_assert_eq!(Vector::parse(&m, &c.format(&m)).unwrap(), c);
        for id in 0..m.len() {
            let name = m.element_name(id);
            for pair in m.blocks_containing(id) {
                prop_assert_eq!(m.embed(pair, m.parse_role(pair, &name).unwrap()), id);
            }
        }
    }

    #[test]
    fn poset_json_round_trip(seed: u64) {
        let p = random_poset(&mut Lcg::new(seed), 5);
        prop_assert_eq!(Poset::parse_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn algorithm_gives_the_1960_complement(seed: u64, i: usize, j: usize, strategy_seed: u64) {
        let (m, ideals) = setup(seed);
        let (a, b) = (pick(&ideals, i), pick(&ideals, j));
        let (u, v) = (vector_meet(&m, &a, &b).unwrap(), vector_join(&m, &a, &b).unwrap());
        let run = run_algorithm(&m, &u, &v, Strategy::SeededRandom(strategy_seed)).unwrap();
        prop_assert!(complements_among(&m, &ideals, &u, &v).contains(&run.s));
        prop_assert_eq!(&run.s, &s1960(&m, &u, &v));
        prop_assert_eq!(run.s, run_algorithm(&m, &u, &v, Strategy::Lexicographic).unwrap().s);
    }

    #[test]
    fn strategy_names_round_trip(seed: u64) {
        for s in Strategy::family(4, seed) {
            prop_assert_eq!(s.to_string().parse::<Strategy>().unwrap(), s);
        }
    }
}
