#!/usr/bin/env python3
"""Writes the bundled BLIF fixtures under data/ and checks them arithmetically."""

from __future__ import annotations

import itertools
import pathlib
import sys

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


class Net:
    def __init__(self, model, pis, pos):
        self.model = model
        self.pis = list(pis)
        self.pos = list(pos)
        self.nodes = []  # (name, fanins, table as list of bits)

    def node(self, name, fanins, fn):
        k = len(fanins)
        bits = [int(bool(fn(*[(m >> i) & 1 for i in range(k)]))) for m in range(1 << k)]
        self.nodes.append((name, list(fanins), bits))

    def replace(self, name, fanins, fn):
        self.nodes = [n for n in self.nodes if n[0] != name]
        self.node(name, fanins, fn)

    def copy(self, model):
        other = Net(model, self.pis, self.pos)
        other.nodes = [(n, list(f), list(b)) for n, f, b in self.nodes]
        return other

    def evaluate(self, assignment):
        values = dict(assignment)
        pending = list(self.nodes)
        while pending:
            rest = []
            for name, fanins, bits in pending:
                if all(f in values for f in fanins):
                    index = sum(values[f] << i for i, f in enumerate(fanins))
                    values[name] = bits[index]
                else:
                    rest.append((name, fanins, bits))
            if len(rest) == len(pending):
                raise RuntimeError("cycle or undriven net")
            pending = rest
        return [values[p] for p in self.pos]

    def blif(self):
        lines = [f".model {self.model}", ".inputs " + " ".join(self.pis), ".outputs " + " ".join(self.pos)]
        for name, fanins, bits in self.nodes:
            lines.append(".names " + " ".join(fanins + [name]))
            if not fanins:
                if bits[0]:
                    lines.append("1")
                continue
            for m, b in enumerate(bits):
                if b:
                    lines.append("".join(str((m >> i) & 1) for i in range(len(fanins))) + " 1")
        lines.append(".end")
        return "\n".join(lines) + "\n"


def word(bits):
    return sum(b << i for i, b in enumerate(bits))


def maj(a, b, c):
    return (a & b) | (a & c) | (b & c)


def adder8():
    pis = [f"a{i}" for i in range(8)] + [f"b{i}" for i in range(8)] + ["cin"]
    pos = [f"s{i}" for i in range(8)] + ["cout"]
    n = Net("adder8", pis, pos)

    def two_bit(lo_a, lo_b, hi_a, hi_b, c):
        return lo_a + lo_b + c + 2 * (hi_a + hi_b)

    n.node("s0", ["a0", "b0", "cin"], lambda a, b, c: a ^ b ^ c)
    n.node("s1", ["a0", "b0", "a1", "b1", "cin"], lambda *x: (two_bit(*x) >> 1) & 1)
    n.node("c2", ["a0", "b0", "a1", "b1", "cin"], lambda *x: (two_bit(*x) >> 2) & 1)
    n.node("s2", ["a2", "b2", "c2"], lambda a, b, c: a ^ b ^ c)
    n.node("s3", ["a2", "b2", "a3", "b3", "c2"], lambda *x: (two_bit(*x) >> 1) & 1)
    n.node("c4", ["a2", "b2", "a3", "b3", "c2"], lambda *x: (two_bit(*x) >> 2) & 1)
    n.node("x4", ["a4", "b4"], lambda a, b: a ^ b)
    n.node("s4", ["x4", "a2", "b2", "a3", "b3", "c2"], lambda x, *r: x ^ ((two_bit(*r) >> 2) & 1))
    n.node("s5", ["a4", "b4", "a5", "b5", "c4"], lambda *x: (two_bit(*x) >> 1) & 1)
    n.node("c6", ["a4", "b4", "a5", "b5", "c4"], lambda *x: (two_bit(*x) >> 2) & 1)
    n.node("x6", ["a6", "b6"], lambda a, b: a ^ b)
    n.node("s6", ["x6", "a4", "b4", "a5", "b5", "c4"], lambda x, *r: x ^ ((two_bit(*r) >> 2) & 1))
    n.node("s7", ["a6", "b6", "a7", "b7", "c6"], lambda *x: (two_bit(*x) >> 1) & 1)
    n.node("cout", ["a6", "b6", "a7", "b7", "c6"], lambda *x: (two_bit(*x) >> 2) & 1)
    return n


def check_adder(n, width):
    for a in range(1 << width):
        for b in range(1 << width):
            for c in (0, 1):
                asg = {f"a{i}": (a >> i) & 1 for i in range(width)}
                asg.update({f"b{i}": (b >> i) & 1 for i in range(width)})
                asg["cin"] = c
                assert word(n.evaluate(asg)) == a + b + c, (n.model, a, b, c)


def adder8_exactpair():
    """s6 split into two complementary 6-input LUTs feeding a 2-input output LUT."""
    n = adder8().copy("adder8_exactpair")
    sum6 = lambda x, *r: x ^ ((r[0] + r[1] + r[4] + 2 * (r[2] + r[3])) >> 2 & 1)
    fanins = ["x6", "a4", "b4", "a5", "b5", "c4"]
    n.nodes = [t for t in n.nodes if t[0] != "s6"]
    n.node("j6", fanins, sum6)
    n.node("k6", fanins, lambda *x: 1 - sum6(*x))
    n.node("s6", ["j6", "k6"], lambda j, k: j & (1 - k))
    return n


def adder8_flip():
    n = adder8().copy("adder8")
    name, fanins, bits = next(t for t in n.nodes if t[0] == "s0")
    bits = list(bits)
    bits[5] ^= 1  # a0=1, b0=0, cin=1
    n.nodes = [(name, fanins, bits) if t[0] == "s0" else t for t in n.nodes]
    return n


def adder4():
    pis = [f"a{i}" for i in range(4)] + [f"b{i}" for i in range(4)] + ["cin"]
    pos = [f"s{i}" for i in range(4)] + ["cout"]
    n = Net("adder4", pis, pos)

    def two_bit(lo_a, lo_b, hi_a, hi_b, c):
        return lo_a + lo_b + c + 2 * (hi_a + hi_b)

    n.node("s0", ["a0", "b0", "cin"], lambda a, b, c: a ^ b ^ c)
    n.node("s1", ["a0", "b0", "a1", "b1", "cin"], lambda *x: (two_bit(*x) >> 1) & 1)
    n.node("c2", ["a0", "b0", "a1", "b1", "cin"], lambda *x: (two_bit(*x) >> 2) & 1)
    n.node("s2", ["a2", "b2", "c2"], lambda a, b, c: a ^ b ^ c)
    n.node("s3", ["a2", "b2", "a3", "b3", "c2"], lambda *x: (two_bit(*x) >> 1) & 1)
    n.node("cout", ["a2", "b2", "a3", "b3", "c2"], lambda *x: (two_bit(*x) >> 2) & 1)
    return n


def adder4_stuck():
    n = adder4().copy("adder4")
    n.replace("s0", [], lambda: 0)
    return n


def mult4():
    pis = [f"a{i}" for i in range(4)] + [f"b{i}" for i in range(4)]
    pos = [f"p{i}" for i in range(8)]
    n = Net("mult4", pis, pos)
    low = ["a0", "a1", "a2", "b0", "b1", "b2"]

    def low_bit(i):
        return lambda a0, a1, a2, b0, b1, b2: ((a0 + 2 * a1 + 4 * a2) * (b0 + 2 * b1 + 4 * b2) >> i) & 1

    n.node("p0", ["a0", "b0"], lambda a, b: a & b)
    n.node("p1", ["a0", "a1", "b0", "b1"], lambda a0, a1, b0, b1: ((a0 + 2 * a1) * (b0 + 2 * b1) >> 1) & 1)
    n.node("p2", low, low_bit(2))
    n.node("h0", low, low_bit(3))
    n.node("h1", low, low_bit(4))
    n.node("h2", low, low_bit(5))

    col3 = lambda h, a3, b0, a0, b3: h + a3 * b0 + a0 * b3
    n.node("p3", ["h0", "a3", "b0", "a0", "b3"], lambda *x: col3(*x) & 1)
    n.node("k3", ["h0", "a3", "b0", "a0", "b3"], lambda *x: (col3(*x) >> 1) & 1)

    col4 = lambda h, a3, b1, a1, b3, k: h + a3 * b1 + a1 * b3 + k
    f4 = ["h1", "a3", "b1", "a1", "b3", "k3"]
    n.node("p4", f4, lambda *x: col4(*x) & 1)
    n.node("k4a", f4, lambda *x: (col4(*x) >> 1) & 1)
    n.node("k4b", f4, lambda *x: (col4(*x) >> 2) & 1)

    col5 = lambda h, a3, b2, a2, b3, k: h + a3 * b2 + a2 * b3 + k
    f5 = ["h2", "a3", "b2", "a2", "b3", "k4a"]
    n.node("p5", f5, lambda *x: col5(*x) & 1)
    n.node("k5a", f5, lambda *x: (col5(*x) >> 1) & 1)
    n.node("k5b", f5, lambda *x: (col5(*x) >> 2) & 1)

    col6 = lambda a3, b3, k4b, k5a: a3 * b3 + k4b + k5a
    n.node("p6", ["a3", "b3", "k4b", "k5a"], lambda *x: col6(*x) & 1)
    n.node("p7", ["a3", "b3", "k4b", "k5a", "k5b"], lambda a3, b3, k4b, k5a, k5b: ((col6(a3, b3, k4b, k5a) >> 1) + k5b) & 1)
    return n


def check_mult(n):
    for a in range(16):
        for b in range(16):
            asg = {f"a{i}": (a >> i) & 1 for i in range(4)}
            asg.update({f"b{i}": (b >> i) & 1 for i in range(4)})
            assert word(n.evaluate(asg)) == a * b, (a, b)


def mult_error_rate(n):
    wrong = 0
    for a in range(16):
        for b in range(16):
            asg = {f"a{i}": (a >> i) & 1 for i in range(4)}
            asg.update({f"b{i}": (b >> i) & 1 for i in range(4)})
            wrong += word(n.evaluate(asg)) != a * b
    return wrong / 256


def drop_input(n, model, node, var):
    """Replaces `node` by its cofactor with fanin `var` fixed to 0."""
    out = n.copy(model)
    name, fanins, bits = next(t for t in out.nodes if t[0] == node)
    i = fanins.index(var)
    kept = [f for f in fanins if f != var]
    new_bits = []
    for m in range(1 << len(kept)):
        full = 0
        for j, f in enumerate(kept):
            full |= ((m >> j) & 1) << fanins.index(f)
        new_bits.append(bits[full])
    out.nodes = [(name, kept, new_bits) if t[0] == node else t for t in out.nodes]
    return out


def main():
    DATA.mkdir(exist_ok=True)
    (DATA / "qplus").mkdir(exist_ok=True)

    fixtures = {
        "adder8.blif": adder8(),
        "adder8_exactpair.blif": adder8_exactpair(),
        "adder8_flip.blif": adder8_flip(),
        "adder4.blif": adder4(),
        "adder4_s0_stuck0.blif": adder4_stuck(),
        "mult4.blif": mult4(),
    }
    check_adder(fixtures["adder8.blif"], 8)
    check_adder(fixtures["adder8_exactpair.blif"], 8)
    check_adder(fixtures["adder4.blif"], 4)
    check_mult(fixtures["mult4.blif"])

    exact = mult4()
    # h2 loses a0 and k5b loses k4a: both become LUT-5s
    inter_a = drop_input(drop_input(exact, "mult4", "h2", "a0"), "mult4", "k5b", "k4a")
    # p1 loses b1: keeps every LUT-6
    inter_b = drop_input(exact, "mult4", "p1", "b1")
    fixtures["qplus/exact.blif"] = exact
    fixtures["qplus/inter_a.blif"] = inter_a
    fixtures["qplus/inter_b.blif"] = inter_b

    for path, net in fixtures.items():
        (DATA / path).write_text(net.blif())
        print(f"{path}: {len(net.pis)} PIs, {len(net.pos)} POs, {len(net.nodes)} nodes")
    print(f"inter_a ER {mult_error_rate(inter_a):.6f}, inter_b ER {mult_error_rate(inter_b):.6f}")


if __name__ == "__main__":
    sys.exit(main())
