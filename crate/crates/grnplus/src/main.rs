fn main() {
    println!("grnplus");
}
