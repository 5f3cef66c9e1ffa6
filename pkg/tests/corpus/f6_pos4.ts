class D { static { for (const x of xs) reg(x); } }
