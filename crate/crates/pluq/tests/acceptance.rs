//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line (visible with `cargo test -- --nocapture`).

use std::time::Instant;

use pluq::{
    arithmetic_cost, bruhat, check_table_row, column_echelon, leading_echelon, leu, oracle,
    pluq_crout_lex, pluq_iterative, pluq_left_looking_product, pluq_right_looking_product,
    pluq_tile_recursive, random_rank_matrix, strategy_table, DenseMatrix, PermStrategy,
    PrimeField, SearchOrder, SplitMix64, SubPermutationMatrix,
};

fn report(n: u32, name: &str, ok: bool) {
    println!("criterion {n:2} {name}: {}", if ok { "pass" } else { "FAIL" });
    assert!(ok, "criterion {n} ({name}) failed");
}

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

/// The running 4x4 example with rank profile matrix {(1,1), (2,3), (4,2)}.
fn example1() -> DenseMatrix {
    DenseMatrix::from_rows(
        &[
            vec![2, 0, 3, 0],
            vec![1, 0, 0, 0],
            vec![0, 0, 4, 0],
            vec![0, 2, 0, 1],
        ],
        gf(101),
    )
    .unwrap()
}

fn sparse_random(m: usize, n: usize, field: PrimeField, rng: &mut SplitMix64) -> DenseMatrix {
    let mut a = DenseMatrix::zero(m, n, field);
    for i in 1..=m {
        for j in 1..=n {
            if rng.below(2) == 1 {
                a.set(i, j, rng.element(field));
            }
        }
    }
    a
}

#[test]
fn criterion_01_golden_example() {
    let start = Instant::now();
    let a = example1();
    let want = vec![(1, 1), (2, 3), (4, 2)];
    let mut ok = oracle::rpm_oracle(&a).pivots() == want.as_slice();
    let engines: Vec<pluq::PluqFactors> = vec![
        pluq_crout_lex(&a).unwrap(),
        pluq_tile_recursive(&a, 1).unwrap(),
        pluq_tile_recursive(&a, 4).unwrap(),
        pluq_left_looking_product(&a).unwrap(),
        pluq_right_looking_product(&a).unwrap(),
    ];
    for fac in engines {
        ok &= fac.pivoting_matrix().pivots() == want.as_slice();
    }
    ok &= start.elapsed().as_secs() < 1;
    report(1, "golden example pivots", ok);
}

#[test]
fn criterion_02_lex_transposition_counterexample() {
    let a = DenseMatrix::from_rows(&[vec![0, 0, 1], vec![2, 3, 0]], gf(101)).unwrap();
    let with_trans = pluq_iterative(
        &a,
        SearchOrder::Lex,
        PermStrategy::Transposition,
        PermStrategy::Transposition,
    )
    .unwrap();
    let (_, cols) = with_trans.pivoting_matrix().supports();
    let col_rp = oracle::col_rank_profile(&a);
    let mut ok = col_rp.indices() == [1, 3] && cols != col_rp.indices();

    let with_rot = pluq_iterative(
        &a,
        SearchOrder::Lex,
        PermStrategy::Transposition,
        PermStrategy::Rotation,
    )
    .unwrap();
    ok &= with_rot.pivoting_matrix() == oracle::rpm_oracle(&a)
        && with_rot.pivoting_matrix().pivots() == [(1, 3), (2, 1)];
    report(2, "column transpositions lose the column rank profile", ok);
}

#[test]
fn criterion_03_strategy_table_conformance() {
    let start = Instant::now();
    let mut failures = 0u64;
    for p in [7u64, 131063] {
        let field = gf(p);
        for row in strategy_table() {
            let mut rng = SplitMix64::new(0x7ab1e + p);
            for _ in 0..200 {
                let m = 1 + rng.below(12) as usize;
                let n = 1 + rng.below(14) as usize;
                let a = sparse_random(m, n, field, &mut rng);
                if !check_table_row(&a, &row).unwrap().is_empty() {
                    failures += 1;
                }
            }
        }
    }
    let ok = failures == 0 && start.elapsed().as_secs() < 60;
    report(3, "strategy table conformance (200 x 2 fields x 11 rows)", ok);
}

#[test]
fn criterion_04_leading_rank_equality() {
    let start = Instant::now();
    let field = gf(7);
    let mut rng = SplitMix64::new(4);
    let mut ok = true;
    for _ in 0..100 {
        let m = 1 + rng.below(8) as usize;
        let n = 1 + rng.below(8) as usize;
        let a = sparse_random(m, n, field, &mut rng);
        let rpm = oracle::rpm_oracle(&a);
        for i in 0..=m {
            for j in 0..=n {
                ok &= oracle::rank(&a.leading(i, j)) == rpm.leading(i, j).rank();
            }
        }
    }
    ok &= start.elapsed().as_secs() < 30;
    report(4, "leading sub-matrix ranks match the rank profile matrix", ok);
}

#[test]
fn criterion_05_reconstruction_everywhere() {
    let field7 = gf(7);
    let field_big = gf(131063);
    let mut rng = SplitMix64::new(5);
    let mut instances: Vec<DenseMatrix> = vec![
        DenseMatrix::zero(0, 5, field7),
        DenseMatrix::zero(5, 0, field7),
        DenseMatrix::zero(0, 0, field7),
        DenseMatrix::zero(4, 6, field7),
        DenseMatrix::identity(5, field_big),
    ];
    while instances.len() < 500 {
        let m = 1 + rng.below(8) as usize;
        let n = 1 + rng.below(8) as usize;
        let field = if rng.below(2) == 0 { field7 } else { field_big };
        let a = match rng.below(4) {
            0 => random_rank_matrix(m, n, m.min(n), field, &mut rng).unwrap(), // full rank
            1 => random_rank_matrix(m, n, 1.min(m.min(n)), field, &mut rng).unwrap(), // rank <= 1
            _ => sparse_random(m, n, field, &mut rng),
        };
        instances.push(a);
    }
    let orders = [
        SearchOrder::RowOrder,
        SearchOrder::ColOrder,
        SearchOrder::Lex,
        SearchOrder::RevLex,
        SearchOrder::Product,
    ];
    let strats = [PermStrategy::Transposition, PermStrategy::Rotation];
    let mut ok = true;
    for a in &instances {
        ok &= pluq_crout_lex(a).unwrap().verify(a).unwrap();
        ok &= pluq_left_looking_product(a).unwrap().verify(a).unwrap();
        ok &= pluq_right_looking_product(a).unwrap().verify(a).unwrap();
        ok &= pluq_tile_recursive(a, 1).unwrap().verify(a).unwrap();
        ok &= pluq_tile_recursive(a, 3).unwrap().verify(a).unwrap();
        for order in orders {
            for rp in strats {
                for cp in strats {
                    ok &= pluq_iterative(a, order, rp, cp).unwrap().verify(a).unwrap();
                }
            }
        }
        if !ok {
            break;
        }
    }
    report(5, "P L U Q reconstructs on 500 instances, every engine", ok);
}

fn same_column_space(a: &DenseMatrix, b: &DenseMatrix) -> bool {
    let ra = oracle::rank(a);
    ra == oracle::rank(b) && oracle::rank(&a.hstack(b).unwrap()) == ra
}

#[test]
fn criterion_06_echelon_forms() {
    let field = gf(101);
    let mut rng = SplitMix64::new(6);
    let mut ok = true;
    for trial in 0..200 {
        let m = 1 + rng.below(8) as usize;
        let n = 1 + rng.below(8) as usize;
        let a = sparse_random(m, n, field, &mut rng);
        let fac = pluq_crout_lex(&a).unwrap();
        let ech = column_echelon(&fac).unwrap();
        ok &= ech.is_staircase();
        let pivot_rows: Vec<usize> = ech.pivots().iter().map(|&(i, _)| i).collect();
        ok &= pivot_rows == oracle::row_rank_profile(&a).indices();
        ok &= same_column_space(&a, ech.matrix());
        // leading-echelon agreement on a subsample to keep this quick
        if trial % 10 == 0 {
            for i in 0..=m {
                for j in 0..=n {
                    let lead = leading_echelon(&fac, i, j).unwrap();
                    let block = a.leading(i, j);
                    let fresh = column_echelon(&pluq_crout_lex(&block).unwrap()).unwrap();
                    ok &= lead.is_staircase();
                    ok &= lead.pivots() == fresh.pivots();
                    ok &= same_column_space(lead.matrix(), fresh.matrix());
                    ok &= same_column_space(&block, lead.matrix());
                }
            }
        }
        if !ok {
            break;
        }
    }
    report(6, "echelon forms: staircase, profiles, leading blocks", ok);
}

#[test]
fn criterion_07_leu_and_bruhat() {
    let field = gf(131063);
    let mut rng = SplitMix64::new(7);
    let mut ok = true;
    for _ in 0..200 {
        let m = 1 + rng.below(7) as usize;
        let n = 1 + rng.below(7) as usize;
        let a = sparse_random(m, n, field, &mut rng);

        let leu = leu(&pluq_crout_lex(&a).unwrap()).unwrap();
        ok &= leu.reconstruct().unwrap() == a;
        for i in 1..=m {
            ok &= leu.l().get(i, i) == 1;
            for j in i + 1..=m {
                ok &= leu.l().get(i, j) == 0;
            }
        }
        for j in 1..=n {
            ok &= leu.u().get(j, j) != 0;
            for i in j + 1..=n {
                ok &= leu.u().get(i, j) == 0;
            }
        }

        let b = bruhat(&a).unwrap();
        ok &= b.reconstruct().unwrap() == a;
        for i in 1..=m {
            ok &= b.v().get(i, i) == 1;
            for j in 1..i {
                ok &= b.v().get(i, j) == 0;
            }
        }
        if !ok {
            break;
        }
    }
    // non-uniqueness witness: two distinct LEU decompositions of the swap
    let f = gf(101);
    let swap = DenseMatrix::from_rows(&[vec![0, 1], vec![1, 0]], f).unwrap();
    let e = SubPermutationMatrix::new(2, 2, vec![(1, 2), (2, 1)]).unwrap();
    let mut witnesses = Vec::new();
    for a in [0i64, 1] {
        let l = DenseMatrix::from_signed_rows(&[vec![1, 0], vec![a, 1]], f).unwrap();
        let u = DenseMatrix::from_signed_rows(&[vec![1, -a], vec![0, 1]], f).unwrap();
        ok &= l.matmul(&e.expand(f)).unwrap().matmul(&u).unwrap() == swap;
        witnesses.push((l, u));
    }
    ok &= witnesses[0] != witnesses[1];
    report(7, "LEU and Bruhat: triangular, exact, non-unique", ok);
}

#[test]
fn criterion_08_generic_column_profile_needs_no_column_permutation() {
    let field = gf(131063);
    let mut rng = SplitMix64::new(8);
    let mut ok = true;
    let mut produced = 0;
    while produced < 100 {
        // A = [B | B X] with B of full column rank has generic ColRP.
        let m = 1 + rng.below(6) as usize;
        let r = 1 + rng.below(m as u64) as usize;
        let extra = rng.below(4) as usize;
        let mut b = DenseMatrix::zero(m, r, field);
        for i in 1..=m {
            for j in 1..=r {
                b.set(i, j, rng.element(field));
            }
        }
        if oracle::rank(&b) < r {
            continue;
        }
        let mut x = DenseMatrix::zero(r, extra, field);
        for i in 1..=r {
            for j in 1..=extra {
                x.set(i, j, rng.element(field));
            }
        }
        let a = b.hstack(&b.matmul(&x).unwrap()).unwrap();
        produced += 1;

        let fac = pluq_iterative(
            &a,
            SearchOrder::RevLex,
            PermStrategy::Rotation,
            PermStrategy::Transposition,
        )
        .unwrap();
        ok &= fac.q().is_identity();
        // R_A = P [I_r; 0]: pivots at (sigma_P(t), t)
        let mut expected: Vec<(usize, usize)> =
            (1..=fac.rank()).map(|t| (fac.p().image(t), t)).collect();
        expected.sort_unstable();
        ok &= oracle::rpm_oracle(&a).pivots() == expected.as_slice();
        if !ok {
            break;
        }
    }
    report(8, "generic column profile: revlex PLU without Q", ok);
}

#[test]
fn criterion_09_crout_does_fewer_reductions() {
    let start = Instant::now();
    let field = gf(131063);
    let mut rng = SplitMix64::new(9);
    let mut ok = true;
    for _ in 0..10 {
        let a = random_rank_matrix(200, 200, 100, field, &mut rng).unwrap();
        let crout = pluq_crout_lex(&a).unwrap();
        let right = pluq_right_looking_product(&a).unwrap();
        ok &= crout.rank() == 100 && right.rank() == 100;
        ok &= crout.reductions() < right.reductions();
    }
    ok &= start.elapsed().as_secs() < 60;
    report(9, "Crout reduces strictly less than right-looking", ok);
}

#[test]
fn criterion_10_cost_formula() {
    // hand-evaluated 2mnr + (2/3)r^3 - r^2(m+n) for three shapes
    let cases = [
        (256usize, 256usize, 128usize, 16_777_216.0 + 4_194_304.0 / 3.0 - 8_388_608.0),
        (200, 200, 100, 8_000_000.0 + 2_000_000.0 / 3.0 - 4_000_000.0),
        (64, 32, 16, 65_536.0 + 8_192.0 / 3.0 - 24_576.0),
    ];
    let mut ok = true;
    for (m, n, r, want) in cases {
        ok &= (arithmetic_cost(m, n, r) - want).abs() < 1e-6;
    }
    report(10, "benchmark cost formula", ok);
}
