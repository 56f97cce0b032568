use std::collections::HashSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use thompson_core::element::{evaluate_word, generator_pl, Generator, PLMap, Word};
use thompson_core::metric::{Ball, LengthOracle, Limits};

// Published growth series of F for this generating set.
const SPHERES: [usize; 9] = [1, 4, 12, 36, 108, 314, 906, 2576, 7280];

fn random_word(rng: &mut StdRng, max_len: usize) -> Word {
    let n = rng.gen_range(0..=max_len);
    (0..n)
        .map(|_| Generator::ALL[rng.gen_range(0..4)])
        .collect()
}

#[test]
fn sphere_sizes_match_growth_series() {
    let ball = Ball::build(8, &Limits::default()).unwrap();
    assert_eq!(ball.sphere_sizes(), SPHERES);
}

// Breadth-first search that identifies elements by their PL breakpoints
// instead of tree pairs.
#[test]
fn sphere_sizes_match_pl_search() {
    let key = |m: &PLMap| format!("{:?}", m.breakpoints());
    let mut seen: HashSet<String> = HashSet::new();
    let mut frontier = vec![PLMap::identity()];
    seen.insert(key(&frontier[0]));
    let mut sizes = vec![1];
    for _ in 0..6 {
        let mut next = Vec::new();
        for m in &frontier {
            for g in Generator::ALL {
                let h = m.then(generator_pl(g));
                if seen.insert(key(&h)) {
                    next.push(h);
                }
            }
        }
        sizes.push(next.len());
        frontier = next;
    }
    assert_eq!(sizes, SPHERES[..7]);
}

#[test]
fn bidirectional_search_matches_ball() {
    let limits = Limits::default();
    let ball = Ball::build(8, &limits).unwrap();
    let mut rng = StdRng::seed_from_u64(7);
    let mut oracle = LengthOracle::new(limits);
    for _ in 0..200 {
        let w = random_word(&mut rng, 8);
        let g = evaluate_word(&w);
        let want = ball.length_of(&g).unwrap();
        assert!(want <= w.len());
        // a fresh oracle forces the backward side to do real work
        let mut fresh = LengthOracle::new(limits);
        assert_eq!(fresh.geodesic_length(&g).unwrap(), want, "{w}");
        assert_eq!(oracle.geodesic_length(&g).unwrap(), want, "{w}");
    }
}

#[test]
fn lengths_are_invariant_under_inversion() {
    let mut rng = StdRng::seed_from_u64(11);
    let mut oracle = LengthOracle::new(Limits::default());
    for _ in 0..50 {
        let w = random_word(&mut rng, 14);
        let a = oracle.geodesic_length(&evaluate_word(&w)).unwrap();
        let b = oracle
            .geodesic_length(&evaluate_word(&w.inverse()))
            .unwrap();
        assert_eq!(a, b, "{w}");
        assert!(a <= w.len() && a % 2 == w.len() % 2);
    }
}

#[test]
fn powers_of_x0_are_geodesic() {
    let mut oracle = LengthOracle::new(Limits::default());
    for n in 0..=12 {
        let w = Word::empty().power(Generator::X0, n);
        assert_eq!(oracle.geodesic_length(&evaluate_word(&w)).unwrap(), n);
    }
}

#[test]
fn fellow_traveler_is_symmetric() {
    let mut rng = StdRng::seed_from_u64(3);
    let mut oracle = LengthOracle::new(Limits::default());
    for _ in 0..30 {
        let (w, v) = (random_word(&mut rng, 6), random_word(&mut rng, 6));
        let a = oracle.fellow_traveler_constant(&w, &v).unwrap();
        let b = oracle.fellow_traveler_constant(&v, &w).unwrap();
        assert_eq!(a, b);
        let mut ws = w.clone();
        ws.push(Generator::X1Inv);
        assert!(oracle.fellow_traveler_constant(&w, &ws).unwrap() <= 1);
    }
}

#[test]
fn cache_files_reload() {
    let ball = Ball::build(5, &Limits::default()).unwrap();
    let mut buf = Vec::new();
    ball.write_cache(&mut buf).unwrap();
    let back = Ball::read_cache(&buf[..]).unwrap();
    let mut oracle = LengthOracle::with_ball(back, Limits::default());
    let f2 = evaluate_word(&"ABaaaaBAA".parse().unwrap());
    assert_eq!(oracle.geodesic_length(&f2).unwrap(), 9);
    assert_eq!(ball.restricted(3).sphere_sizes(), SPHERES[..4]);
}
