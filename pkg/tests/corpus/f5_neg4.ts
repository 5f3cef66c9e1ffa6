import asrt from "assert";
