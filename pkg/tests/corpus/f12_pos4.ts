x.y.z ||= w;
