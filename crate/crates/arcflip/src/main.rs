fn main() {
    println!("arcflip");
}
