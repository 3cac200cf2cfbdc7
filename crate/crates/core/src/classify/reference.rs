//! The published tables, transcribed as data so computed tables can be diffed
//! against them. Entries are kept exactly as printed, typos included.

/// `(d, [mu_1, mu_2, mu_3], [k_1/d, k_2/d, k_3/d], [lambda, mu, nu])`, fractions as
/// `(numerator, denominator)`.
pub type Table1Entry = (u32, [(i64, i64); 3], [(i64, i64); 3], [(i64, i64); 3]);

pub const TABLE1: [Table1Entry; 14] = [
    (12, [(2, 3), (2, 3), (1, 2)], [(1, 4), (1, 4), (5, 12)], [(1, 2), (1, 3), (1, 3)]),
    (6, [(2, 3), (2, 3), (1, 3)], [(1, 6), (1, 6), (1, 2)], [(2, 3), (1, 3), (1, 3)]),
    (30, [(2, 3), (2, 3), (3, 5)], [(3, 10), (3, 10), (11, 30)], [(2, 5), (1, 3), (1, 3)]),
    (60, [(2, 3), (3, 5), (1, 2)], [(13, 60), (17, 60), (23, 60)], [(1, 2), (2, 5), (1, 3)]),
    (30, [(2, 3), (3, 5), (2, 5)], [(1, 6), (7, 30), (13, 30)], [(3, 5), (2, 5), (1, 3)]),
    (24, [(3, 4), (2, 3), (1, 2)], [(5, 24), (7, 24), (11, 24)], [(1, 2), (1, 3), (1, 4)]),
    (12, [(3, 4), (3, 4), (1, 3)], [(1, 6), (1, 6), (7, 12)], [(2, 3), (1, 4), (1, 4)]),
    (10, [(3, 5), (3, 5), (3, 5)], [(3, 10), (3, 10), (3, 10)], [(2, 5), (2, 5), (2, 5)]),
    (60, [(4, 5), (2, 3), (1, 2)], [(11, 60), (19, 60), (29, 60)], [(1, 2), (1, 3), (1, 5)]),
    (30, [(4, 5), (2, 3), (1, 3)], [(1, 10), (7, 30), (17, 30)], [(2, 3), (1, 3), (1, 5)]),
    (15, [(4, 5), (2, 3), (2, 5)], [(2, 15), (4, 15), (8, 15)], [(3, 5), (1, 3), (1, 5)]),
    (20, [(4, 5), (3, 5), (1, 2)], [(3, 20), (7, 20), (9, 20)], [(1, 2), (2, 5), (1, 5)]),
    (30, [(4, 5), (4, 5), (1, 3)], [(1, 6), (1, 6), (19, 30)], [(2, 3), (1, 5), (1, 5)]),
    (10, [(4, 5), (4, 5), (1, 5)], [(1, 10), (1, 10), (7, 10)], [(4, 5), (1, 5), (1, 5)]),
];

/// One printed line: modulus, tuples, and the stated multiplicity of each tuple.
pub type TableLine = (u32, &'static [&'static [u32]], usize);

pub const TABLE2: &[TableLine] = &[
    (6, &[&[1, 1, 1], &[5, 5, 5]], 1),
    (6, &[&[1, 1, 3], &[3, 5, 5]], 1),
    (10, &[&[1, 1, 1], &[3, 3, 3], &[7, 7, 7], &[9, 9, 9]], 1),
    (10, &[&[1, 3, 3], &[3, 9, 9], &[1, 1, 7], &[7, 7, 9]], 1),
    (12, &[&[1, 3, 5], &[7, 9, 11]], 2),
    (12, &[&[1, 2, 7], &[5, 10, 11]], 2),
    (12, &[&[1, 2, 2], &[5, 10, 10], &[2, 2, 7], &[10, 10, 11]], 1),
    (12, &[&[1, 3, 3], &[3, 3, 5], &[7, 9, 9], &[9, 9, 11]], 1),
    (
        15,
        &[&[1, 2, 4], &[2, 4, 8], &[1, 4, 8], &[7, 13, 14], &[1, 2, 8], &[7, 11, 14], &[7, 11, 13], &[11, 13, 14]],
        1,
    ),
    (
        20,
        &[&[1, 3, 7], &[1, 3, 9], &[1, 7, 9], &[3, 7, 9], &[11, 13, 17], &[11, 13, 19], &[11, 17, 19], &[13, 17, 19]],
        1,
    ),
    (
        24,
        &[&[1, 5, 7], &[1, 5, 11], &[1, 7, 11], &[5, 7, 11], &[13, 17, 19], &[13, 17, 23], &[13, 19, 23], &[17, 19, 23]],
        1,
    ),
    (
        30,
        &[&[1, 5, 5], &[5, 5, 7], &[11, 25, 25], &[5, 5, 13], &[17, 25, 25], &[5, 5, 19], &[23, 25, 25], &[25, 25, 29]],
        1,
    ),
    (30, &[&[3, 7, 17], &[19, 21, 29], &[1, 9, 11], &[13, 23, 27]], 2),
    (
        30,
        &[&[1, 9, 9], &[3, 3, 7], &[9, 9, 11], &[13, 27, 27], &[3, 3, 17], &[19, 21, 21], &[23, 27, 27], &[21, 21, 29]],
        1,
    ),
    (30, &[&[5, 7, 13], &[1, 5, 19], &[17, 23, 25], &[11, 25, 29]], 2),
    (
        60,
        &[&[1, 11, 19], &[7, 13, 17], &[1, 11, 29], &[7, 13, 23], &[7, 17, 23], &[1, 19, 29], &[13, 17, 23], &[11, 19, 29]],
        1,
    ),
    (
        60,
        &[&[31, 41, 49], &[37, 43, 47], &[31, 41, 59], &[37, 43, 53], &[37, 47, 53], &[31, 49, 59], &[43, 47, 53], &[41, 49, 59]],
        1,
    ),
];

pub const TABLE3: &[TableLine] = &[
    (6, &[&[1, 1, 1, 1], &[5, 5, 5, 5]], 1),
    (6, &[&[1, 1, 1, 3], &[3, 5, 5, 5]], 1),
    (10, &[&[1, 1, 1, 1], &[3, 3, 3, 3], &[7, 7, 7, 7], &[9, 9, 9, 9]], 1),
    (10, &[&[1, 3, 3, 3], &[3, 9, 9, 9], &[1, 1, 1, 7], &[7, 7, 7, 9]], 1),
    (12, &[&[1, 2, 2, 7], &[5, 10, 10, 11]], 2),
    (12, &[&[1, 3, 3, 5], &[7, 9, 9, 11]], 2),
    (12, &[&[1, 2, 2, 2], &[5, 10, 10, 10], &[2, 2, 2, 7], &[10, 10, 10, 11]], 1),
    (15, &[&[1, 2, 4, 8], &[7, 11, 13, 14]], 4),
    (20, &[&[1, 3, 7, 9], &[11, 13, 17, 19]], 4),
    (24, &[&[1, 5, 7, 11], &[13, 17, 19, 23]], 4),
    (
        30,
        &[
            &[1, 5, 5, 5],
            &[5, 5, 5, 7],
            &[11, 25, 25, 25],
            &[5, 5, 5, 13],
            &[17, 25, 25, 25],
            &[5, 5, 5, 19],
            &[23, 25, 25, 25],
            &[25, 25, 25, 29],
        ],
        1,
    ),
    (30, &[&[1, 9, 9, 11], &[3, 3, 7, 17], &[19, 21, 21, 29], &[13, 23, 27, 27]], 2),
    (
        30,
        &[
            &[1, 9, 9, 9],
            &[3, 3, 3, 7],
            &[9, 9, 9, 11],
            &[13, 27, 27, 27],
            &[3, 3, 3, 17],
            &[19, 21, 21, 21],
            &[23, 27, 27, 27],
            &[21, 21, 21, 29],
        ],
        1,
    ),
    (30, &[&[1, 5, 5, 19], &[5, 5, 7, 13], &[11, 25, 25, 29], &[17, 23, 25, 25]], 2),
    (60, &[&[1, 11, 19, 29], &[7, 13, 17, 23], &[31, 41, 49, 59], &[37, 43, 47, 53]], 4),
];

/// Moduli listed in Table 3 with no tuples at all.
pub const TABLE3_EMPTY: &[u32] = &[120];

/// Table 4 tuples in printed (unsorted, shape) order.
pub const TABLE4: &[(u32, [u32; 4])] = &[
    (6, [1, 1, 2, 1]),
    (6, [1, 1, 2, 3]),
    (10, [1, 1, 4, 1]),
    (10, [1, 1, 4, 7]),
    (10, [3, 3, 2, 1]),
    (10, [3, 3, 2, 3]),
    (12, [2, 2, 4, 1]),
    (12, [2, 2, 4, 7]),
    (12, [3, 3, 3, 1]),
    (12, [3, 3, 3, 5]),
    (30, [3, 3, 17, 7]),
    (30, [3, 3, 12, 17]),
    (30, [9, 29, 6, 1]),
    (30, [9, 9, 6, 11]),
    (30, [5, 5, 10, 1]),
    (30, [5, 5, 10, 7]),
    (30, [5, 5, 10, 13]),
    (30, [5, 5, 10, 19]),
];
