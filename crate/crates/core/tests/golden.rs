mod common;

use common::*;
use ore_hermite::hermite::{
    build_reduced_system_with_rho, find_degree_sequence, hermite, hermite_given_degrees,
    hermite_given_degrees_with_rho, hermite_naive, verify_hermite, DegreeSequence, Trichotomy,
};
use ore_hermite::text::{format_block, parse_ratfun};
use ore_hermite::RatFun;

#[test]
fn intro_example_hermite_form() {
    let a = intro();
    let pair = hermite(&a);
    assert_eq!(pair.h, intro_h(), "\n{}", format_block(&pair.h));
    assert!(verify_hermite(&a, &pair.h, &pair.u).verified());
}

#[test]
fn intro_example_naive_agrees() {
    let (pair, rank) = hermite_naive(&intro());
    assert_eq!(rank, 3);
    assert_eq!(pair.h, intro_h());
}

#[test]
fn intro_example_degree_sequence() {
    assert_eq!(find_degree_sequence(&intro()).unwrap(), DegreeSequence::new(vec![1, 1, 2]));
}

#[test]
fn worked_example_transform_and_form() {
    let a = worked();
    let Trichotomy::Exact(pair) = hermite_given_degrees(&a, &DegreeSequence::new(vec![1, 0, 2])).unwrap()
    else {
        panic!("expected a unique solution");
    };
    assert_eq!(pair.u, worked_t(), "\n{}", format_block(&pair.u));
    assert_eq!(pair.h, worked_h(), "\n{}", format_block(&pair.h));
    assert_eq!(pair.u[(0, 0)].coeff(0), parse_ratfun("(z+1)/(2*z+1)").unwrap());
    assert_eq!(find_degree_sequence(&a).unwrap(), DegreeSequence::new(vec![1, 0, 2]));
}

#[test]
fn worked_example_small_rho_gives_same_answer() {
    let a = worked();
    let d = DegreeSequence::new(vec![1, 0, 2]);
    let Trichotomy::Exact(pair) = hermite_given_degrees_with_rho(&a, &d, 2).unwrap() else {
        panic!("expected a unique solution");
    };
    assert_eq!(pair.h, worked_h());
    assert_eq!(pair.u, worked_t());
}

#[test]
fn worked_example_reduced_matrix() {
    let sys = build_reduced_system_with_rho(&worked(), &DegreeSequence::new(vec![1, 0, 2]), 2).unwrap();
    let rows: [&str; 9] = [
        "1,0,0,z,z,0,0,0,0",
        "z+1,1,0,1,z+1,z,0,1,0",
        "2,z+1,1,0,2,z+2,z,0,1",
        "z,0,0,z+1,0,0,0,0,0",
        "z^2+z+1,z,0,1,z+1,0,0,2,0",
        "4*z+2,z^2+z+2,z,0,2,z+1,0,0,2",
        "-z,0,0,0,z,0,0,0,0",
        "-z^2-z-1,-z,0,0,1,z,0,z,0",
        "-4*z-2,-z^2-z-2,-z,0,0,2,z,2,z",
    ];
    let expected: Vec<Vec<RatFun>> = rows
        .iter()
        .map(|r| r.split(',').map(|e| parse_ratfun(e).unwrap()).collect())
        .collect();
    assert_eq!(sys.a_tilde(), expected);
    let g = sys.g_tilde();
    let ones: Vec<Vec<usize>> = g
        .iter()
        .map(|row| (0..row.len()).filter(|&c| row[c].is_one()).collect())
        .collect();
    assert_eq!(ones, vec![vec![0], vec![3], vec![7]]);
    assert!(g.iter().flatten().all(|e| e.is_zero() || e.is_one()));
}

#[test]
fn worked_example_classifications() {
    let a = worked();
    let probe = |d: Vec<usize>| hermite_given_degrees(&a, &DegreeSequence::new(d)).unwrap();
    assert_eq!(probe(vec![2, 1, 2]), Trichotomy::StrictlyDominates);
    assert_eq!(probe(vec![0, 0, 2]), Trichotomy::NotDominates);
}
