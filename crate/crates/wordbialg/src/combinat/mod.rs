//! Words, compositions, partitions, tableau words and permutations.

pub mod composition;
pub mod perm;
pub mod tableau;
pub mod word;

pub use composition::{comp, part, Composition, Partition};
pub use perm::{eval_hecke_word, Permutation};
pub use tableau::{is_increasing_tableau, is_semistandard_tableau, rsk_insertion_tableau, semistandard_shape};
pub use word::{packed_words, w, words_of_length, words_up_to, AnchoredWord, Word};
