//! Conjugacy classes of G(m,1,n): colored cycle types, class sizes, and a
//! canonical representative for each.

use wreath_hurwitz::partitions::ColoredBasis;
use wreath_hurwitz::wreath::{class_representative, class_size, group_order};

fn main() {
    let (m, n) = (2u32, 3usize);
    let basis = ColoredBasis::new(m, n as u32);
    println!("G({m},1,{n}) has order {}", group_order(m, n));

    let mut total = 0u128;
    for cp in basis.iter() {
        let size = class_size(m, n, cp);
        let rep = class_representative(m, n, cp);
        println!("  class {cp:<8} size {size:>2}  representative {rep}");
        total += size;
    }
    assert_eq!(total, group_order(m, n));
    println!("{} classes, sizes sum to the group order", basis.dim());
}
