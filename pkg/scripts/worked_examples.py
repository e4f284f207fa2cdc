"""Print every registered demo program under all handler disciplines and the oracle."""
from scoped_effects import oracles
from scoped_effects.cli import HANDLER_KINDS, _interpret
from scoped_effects.effects import REGISTRY
from scoped_effects.serialize import show


def main():
    for effect in REGISTRY.values():
        for label, p in effect.programs.items():
            print(f"{effect.name} / {label}: {show(p)}")
            for kind in HANDLER_KINDS:
                result = _interpret(effect, kind, p)
                if effect.name == "state":
                    final, value = result.table[2]
                    print(f"    {kind:<11} s0=2 -> ({final}, {show(value)})")
                else:
                    print(f"    {kind:<11} {show(result)}")
    print(f"algebraic-once counterfactual on oncePair: "
          f"{show(oracles.nondet_algebraic_once(REGISTRY['nondet'].programs['oncePair']))}")


if __name__ == "__main__":
    main()
