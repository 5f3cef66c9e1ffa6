a ||= b;
