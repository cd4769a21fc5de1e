fn main() {
    println!("rtm");
}
