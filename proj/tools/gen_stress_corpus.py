#!/usr/bin/env python3
"""Generates the strategy-comparison corpus (data/corpus/stress.jsonl).

Dialogue id prefixes name the case:
  plain-    menu keywords without internal punctuation; passes under both strategies
  split-    one keyword contains punctuation, so word matching cannot see it
  unseen-   an off-menu item with no annotation answers; fails under both
  zh-       Chinese turns translated by the lexicon
  learn-    an off-menu item with annotation answers; passes under both
"""

import argparse
import json
import random
import sys

BREAD = ["italian", "honey oat", "jalapeño cheddar", "hearty italian", "flatbread", "artisan italian", "multigrain"]
CHEESE = ["american", "pepper jack", "provolone", "swiss", "mozzarella", "feta cheese", "cheddar"]
VEG = ["lettuce", "tomatoes", "cucumbers", "green peppers", "red onions", "spinach", "pickles", "black olives",
       "banana peppers", "avocado", "carrots"]
SAUCE = ["barbecue", "honey mustard", "ranch", "sweet onion", "chipotle southwest", "mayonnaise", "mustard",
         "buffalo", "sriracha"]
EXTRA = ["bacon", "pepperoni", "double meat", "extra cheese", "guacamole"]

SPLIT = [("bread", "9-grain wheat"), ("bread", "italian herbs & cheese"), ("sauce", "oil & vinegar"),
         ("extra", "salt & pepper")]

UNSEEN = [("bread", "Japanese bread", "japanese bread"), ("cheese", "Gouda please", "gouda"),
          ("vegetable", "Some kale", "kale"), ("sauce", "Pesto sauce", "pesto sauce"),
          ("extra", "Fried egg on top", "fried egg"), ("bread", "Sourdough bread", "sourdough"),
          ("cheese", "Brie cheese", "brie cheese")]

GREETINGS = ["Hi there!", "Hello", "Hey", "Good morning", "Good evening"]
FRAMES = {
    "bread": ["{} bread please!", "I'd like {} bread.", "{} bread"],
    "cheese": ["{} please.", "{} for me", "Can I get {}?"],
    "vegetable": ["{} please", "Some {}.", "{}"],
    "sauce": ["{} sauce.", "{} please", "I'll take {}"],
    "extra": ["{} please", "Add {}.", "{}"],
}
SLOTS = ["bread", "cheese", "vegetable", "sauce", "extra"]

ZH = [
    (["你好", "意大利面包", "切达", "生菜", "蜂蜜芥末", "培根"],
     {"bread": "italian", "cheese": "cheddar", "vegetable": "lettuce", "sauce": "honey mustard", "extra": "bacon"}),
    (["嗨", "蜂蜜燕麦", "羊奶奶酪。", "牛油果。", "烧烤酱", "不用了"],
     {"bread": "honey oat", "cheese": "feta cheese", "vegetable": "avocado", "sauce": "barbecue",
      "extra": "Nothing"}),
    (["Hello", "多谷物面包", "瑞士奶酪", "菠菜", "田园酱", "意大利辣香肠"],
     {"bread": "multigrain", "cheese": "swiss", "vegetable": "spinach", "sauce": "ranch", "extra": "pepperoni"}),
    (["你好", "扁面包。", "马苏里拉", "黑橄榄", "蛋黄酱", "没有"],
     {"bread": "flatbread", "cheese": "mozzarella", "vegetable": "black olives", "sauce": "mayonnaise",
      "extra": "Nothing"}),
    (["早上好", "Italian bread please!", "胡椒杰克", "番茄", "Sriracha sauce.", "鳄梨酱"],
     {"bread": "italian", "cheese": "pepper jack", "vegetable": "tomatoes", "sauce": "sriracha",
      "extra": "guacamole"}),
]


def utter(rng, slot, keyword):
    text = rng.choice(FRAMES[slot]).format(keyword)
    return text[0].upper() + text[1:]


def base_order(rng):
    order = {"bread": rng.choice(BREAD), "cheese": rng.choice(CHEESE), "vegetable": rng.choice(VEG),
             "sauce": rng.choice(SAUCE)}
    order["extra"] = "Nothing" if rng.random() < 0.3 else rng.choice(EXTRA)
    return order


def turns_for(rng, order, overrides=None):
    overrides = overrides or {}
    turns = [rng.choice(GREETINGS)]
    for slot in SLOTS:
        if slot in overrides:
            turns.append(overrides[slot])
        elif order[slot] == "Nothing":
            turns.append(rng.choice(["No, thanks!", "Nope", "No thanks"]))
        else:
            turns.append(utter(rng, slot, order[slot]))
    return turns


def record(did, turns, expected, annotations=None):
    return {"id": did, "turns": turns, "expected_order": expected, "annotations": annotations or []}


def generate(seed):
    rng = random.Random(seed)
    out = []
    for i in range(20):
        order = base_order(rng)
        out.append(record(f"plain-{i:02d}", turns_for(rng, order), order))
    for i in range(15):
        slot, keyword = SPLIT[i % len(SPLIT)]
        order = base_order(rng)
        order[slot] = keyword
        out.append(record(f"split-{i:02d}", turns_for(rng, order, {slot: utter(rng, slot, keyword)}), order))
    for i in range(5):
        slot, text, keyword = UNSEEN[i % len(UNSEEN)]
        order = base_order(rng)
        order[slot] = keyword
        out.append(record(f"unseen-{i:02d}", turns_for(rng, order, {slot: text}), order))
    for i, (turns, order) in enumerate(ZH):
        out.append(record(f"zh-{i:02d}", turns, order))
    for i in range(5):
        slot, text, keyword = UNSEEN[(i + 2) % len(UNSEEN)]
        order = base_order(rng)
        order[slot] = keyword
        out.append(record(f"learn-{i:02d}", turns_for(rng, order, {slot: text}), order, [[slot, keyword]]))
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=2020)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    lines = "".join(json.dumps(d, ensure_ascii=False) + "\n" for d in generate(args.seed))
    if args.out == "-":
        sys.stdout.write(lines)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as f:
            f.write(lines)


if __name__ == "__main__":
    main()
