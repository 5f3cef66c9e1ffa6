let re12 = /a||=b/; let z = 1;
