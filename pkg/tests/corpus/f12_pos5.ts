arr[0] &&= val;
