loop: for (;;) { break loop; }
