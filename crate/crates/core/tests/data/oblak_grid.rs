//! Rows of the iterated-∂ grid for f([1,2^3,5,10,14]): per step the state,
//! the class of the chosen maximal index, its left admissible members, and
//! the evaluation.

pub type Step = (&'static [usize], &'static [usize], &'static [usize], usize);

pub const GRID: &[&[Step]] = &[
    &[
        (&[1, 3, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1], &[13, 14], &[13], 14),
        (&[1, 3, 0, 0, 1, 0, 0, 0, 0, 1], &[0, 1], &[1], 11),
        (&[0, 0, 1, 0, 0, 0, 0, 1], &[7, 8], &[7], 8),
        (&[0, 0, 1], &[2, 3], &[2], 3),
    ],
    &[
        (&[2, 2, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1], &[12, 13], &[12], 13),
        (&[2, 2, 0, 1, 0, 0, 0, 0, 1], &[0, 1], &[1], 10),
        (&[0, 1, 0, 0, 0, 0, 1], &[6, 7], &[6], 7),
        (&[0, 1], &[0, 1, 2], &[1], 2),
    ],
    &[
        (&[3, 1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 1], &[11, 12], &[11], 12),
        (&[3, 1, 1, 0, 0, 0, 0, 1], &[0, 1], &[1], 9),
        (&[1, 0, 0, 0, 0, 1], &[5, 6], &[5], 6),
        (&[1], &[0, 1], &[0], 1),
    ],
    &[
        (&[2, 2, 0, 0, 0, 0, 1, 0, 0, 0, 1], &[10, 11], &[10], 11),
        (&[2, 2, 0, 0, 0, 0, 1], &[0, 1], &[1], 8),
        (&[0, 0, 0, 0, 1], &[4, 5], &[4], 5),
    ],
    &[
        (&[3, 1, 0, 0, 0, 1, 0, 0, 0, 1], &[9, 10], &[9], 10),
        (&[3, 1, 0, 0, 0, 1], &[0, 1], &[1], 7),
        (&[0, 0, 0, 1], &[3, 4], &[3], 4),
    ],
    &[
        (&[4, 0, 0, 0, 1, 0, 0, 0, 1], &[8, 9], &[8], 9),
        (&[4, 0, 0, 0, 1], &[0, 1], &[0], 6),
        (&[0, 0, 1], &[2, 3], &[2], 3),
    ],
    &[
        (&[3, 0, 0, 1, 0, 0, 0, 1], &[7, 8], &[7], 8),
        (&[3, 0, 0, 1], &[0, 1], &[0], 5),
        (&[0, 1], &[0, 1, 2], &[1], 2),
    ],
    &[
        (&[2, 0, 1, 0, 0, 0, 1], &[6, 7], &[6], 7),
        (&[2, 0, 1], &[0, 1], &[0], 4),
        (&[1], &[0, 1], &[0], 1),
    ],
    &[(&[1, 1, 0, 0, 0, 1], &[5, 6], &[5], 6), (&[1, 1], &[0, 1], &[1], 3)],
    &[(&[2, 0, 0, 0, 1], &[4, 5], &[4], 5), (&[2], &[0, 1], &[0], 2)],
    &[(&[1, 0, 0, 1], &[3, 4], &[3], 4), (&[1], &[0, 1], &[0], 1)],
    &[(&[0, 0, 1], &[2, 3], &[2], 3)],
    &[(&[0, 1], &[0, 1, 2], &[1], 2)],
    &[(&[1], &[0, 1], &[0], 1)],
    &[],
];
