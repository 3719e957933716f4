#!/usr/bin/env python3
"""Build the desk-scale resource bundle under resources/desk/.

The bundle is synthetic but structured: every word gets a vector made of
topic-axis components plus a small per-word jitter (seeded from the word
itself), so related words have high cosine similarity, unrelated words sit
near zero, and nothing is bit-for-bit degenerate. Co-occurrence counts are
derived per topic domain. The script verifies that the bundled passages are
fully covered (POS, embeddings, grades) and that the beehive passage
contains exactly the ten nouns it was written around.

Run from the repository root:  python3 tools/gen_desk_resources.py
"""

import hashlib
import math
import os
import re
import sys

OUT_DIR = os.path.join(os.path.dirname(__file__), "..", "resources", "desk")
PASSAGE_DIR = os.path.join(os.path.dirname(__file__), "..", "passages")

AXES = [
    # weather
    "storm", "moisture", "sky_air", "heat", "lift_motion", "terrain",
    # astronomy
    "planet", "star", "scope", "space",
    # volcano
    "eruption", "lava_rock", "interior",
    # biology
    "cell_struct", "cell_energy", "organism", "cell_info",
    # bees
    "bees", "bee_act",
    # weather-adjacent professions/tools
    "forecasting",
    # shared low-mass axes
    "physics", "nature", "time_misc", "people", "abstract", "objects",
    # generic distractor domains
    "school", "home", "food", "work", "arts", "town",
    # verb/adjective carriers; the general ones are split into hash-chosen
    # sub-axes below so everyday verbs/adjectives stay only loosely related
    "verbs_general", "verbs_academic", "adj_general",
    "verbs_a", "verbs_b", "verbs_c", "verbs_d", "verbs_e", "verbs_f",
    "adj_a", "adj_b", "adj_c",
]
VERB_SUBAXES = ["verbs_a", "verbs_b", "verbs_c", "verbs_d", "verbs_e", "verbs_f"]
ADJ_SUBAXES = ["adj_a", "adj_b", "adj_c"]
JITTER_DIMS = 8
JITTER_SCALE = 0.08
DIM = len(AXES) + JITTER_DIMS

# word | axis:weight[,axis:weight] | POS[,POS] | grade ('-' = hash-derived)
# pos '-' means: leave out of pos.tsv (exercises the unknown-word path).
VOCAB = """
# ---- thunderstorm passage: storm nouns -------------------------------
thunderstorms | storm:1.0 | NOUN | 5.6
thunderstorm  | storm:1.0 | NOUN | 5.5
storm         | storm:1.0 | NOUN | 2.0
storms        | storm:1.0 | NOUN | 2.1
thunder       | storm:1.0,sky_air:0.15 | NOUN | 3.2
lightning     | storm:1.0,physics:0.2 | NOUN | 3.8
hail          | storm:0.9,moisture:0.35 | NOUN | 4.5
winds         | storm:0.9,sky_air:0.3 | NOUN | 2.4
wind          | storm:0.9,sky_air:0.3 | NOUN | 2.2
tornadoes     | storm:1.0 | NOUN | 5.2
tornado       | storm:1.0 | NOUN | 5.0
gusts         | storm:0.9,sky_air:0.25 | NOUN | 6.3
flash         | storm:0.7,physics:0.3 | NOUN | 3.5
weather       | storm:0.6,sky_air:0.55,forecasting:0.3 | NOUN | 2.5
severe weather | storm:0.9,forecasting:0.3 | MWE | -
# ---- thunderstorm passage: moisture nouns ----------------------------
moisture      | moisture:1.0 | NOUN | 6.8
vapor         | moisture:1.0,sky_air:0.2 | NOUN | 7.4
droplets      | moisture:1.0 | NOUN | 6.1
precipitation | moisture:1.0,storm:0.3 | NOUN | 8.2
rain          | moisture:0.95,storm:0.3 | NOUN | 1.2
water         | moisture:0.85,nature:0.15 | NOUN | 1.0
ice           | moisture:0.8,heat:-0.1 | NOUN | 1.4
# ---- thunderstorm passage: sky/air nouns -----------------------------
atmosphere    | sky_air:1.0,space:0.2 | NOUN | 7.6
air           | sky_air:1.0 | NOUN | 1.3
clouds        | sky_air:0.9,moisture:0.4,storm:0.25 | NOUN | 2.3
cloud         | sky_air:0.9,moisture:0.4,storm:0.25 | NOUN | 2.2
sky           | sky_air:0.95,space:0.25 | NOUN | 1.5
cumulonimbus  | sky_air:0.8,storm:0.5,moisture:0.2 | - | 11.8
# ---- thunderstorm passage: heat / lift / terrain ---------------------
sunshine      | heat:1.0,sky_air:0.2 | NOUN | 2.8
updrafts      | lift_motion:1.0,storm:0.35 | NOUN | 9.4
downdrafts    | lift_motion:1.0,storm:0.35 | NOUN | 9.6
convection    | lift_motion:0.9,heat:0.4 | NOUN | 10.2
fronts        | lift_motion:0.7,storm:0.35,forecasting:0.2 | NOUN | 6.9
lift          | lift_motion:0.9 | NOUN,VERB | 4.0
mountains     | terrain:1.0 | NOUN | 2.6
slopes        | terrain:1.0 | NOUN | 5.4
terrain       | terrain:1.0 | NOUN | 8.8
ground        | terrain:0.9 | NOUN | 1.8
# ---- thunderstorm passage: physics/forecasting/misc nouns ------------
collisions    | physics:0.9,storm:0.2 | NOUN | 7.8
charge        | physics:0.9,storm:0.25 | NOUN | 6.6
meteorologists | forecasting:0.85,storm:0.55,people:0.25 | NOUN | 9.0
forecasters   | forecasting:0.9,storm:0.45,people:0.25 | NOUN | 8.4
radar         | forecasting:0.85,scope:0.25 | NOUN | 7.2
warnings      | forecasting:0.8,abstract:0.2 | NOUN | 4.8
warning       | forecasting:0.8,abstract:0.2 | NOUN | 4.6
ingredients   | abstract:0.8,food:0.25 | NOUN | 6.0
source        | abstract:0.9 | NOUN | 5.0
kind          | abstract:0.9 | NOUN | 2.0
round         | abstract:0.8 | NOUN,ADJ | 2.4
people        | people:1.0 | NOUN | 1.1
time          | time_misc:1.0 | NOUN | 1.0
afternoons    | time_misc:0.9,heat:0.2 | NOUN | 3.0
# ---- thunderstorm verbs ----------------------------------------------
form          | verbs_general:0.9,storm:0.2 | VERB,NOUN | -
forms         | verbs_general:0.9,storm:0.2 | VERB,NOUN | -
produces      | verbs_general:0.9 | VERB | -
bring         | verbs_general:0.9 | VERB | -
watch         | verbs_general:0.9 | VERB | -
develop       | verbs_general:0.85,verbs_academic:0.3 | VERB | -
strike        | verbs_general:0.8,storm:0.3 | VERB | -
strikes       | verbs_general:0.8,storm:0.3 | VERB | -
feed          | verbs_general:0.85,bee_act:0.2 | VERB | -
feeds         | verbs_general:0.85,bee_act:0.2 | VERB | -
enters        | verbs_general:0.9 | VERB | -
warms         | verbs_general:0.6,heat:0.6 | VERB | -
evaporates    | verbs_general:0.4,moisture:0.75,heat:0.3 | VERB | -
holds         | verbs_general:0.9 | VERB | -
hold          | verbs_general:0.9 | VERB | -
rises         | verbs_general:0.5,lift_motion:0.7 | VERB | -
condenses     | verbs_general:0.3,moisture:0.85 | VERB | -
gather        | verbs_general:0.85,bee_act:0.2 | VERB | -
gathers       | verbs_general:0.85 | VERB | -
swell         | verbs_general:0.7,lift_motion:0.4 | VERB | -
carry         | verbs_general:0.9 | VERB | -
freeze        | verbs_general:0.5,moisture:0.55,heat:-0.2 | VERB | -
drag          | verbs_general:0.85 | VERB | -
collide       | verbs_general:0.4,physics:0.75 | VERB | -
separate      | verbs_general:0.8 | VERB,ADJ | -
grows         | verbs_general:0.9 | VERB | -
grow          | verbs_general:0.9 | VERB | -
leaps         | verbs_general:0.85 | VERB | -
booms         | verbs_general:0.6,storm:0.45 | VERB | -
expands       | verbs_general:0.7,physics:0.35 | VERB | -
begins        | verbs_general:0.9 | VERB | -
falls         | verbs_general:0.8,moisture:0.3 | VERB | -
toss          | verbs_general:0.85 | VERB | -
lands         | verbs_general:0.85 | VERB | -
rush          | verbs_general:0.85 | VERB | -
darkens       | verbs_general:0.7,sky_air:0.3 | VERB | -
arrives       | verbs_general:0.9 | VERB | -
arrive        | verbs_general:0.9 | VERB | -
passed        | verbs_general:0.9 | VERB | -
rumble        | verbs_general:0.6,storm:0.45 | VERB | -
moves         | verbs_general:0.9 | VERB | -
come          | verbs_general:0.9 | VERB | -
heats         | verbs_general:0.5,heat:0.65 | VERB | -
lifts         | verbs_general:0.5,lift_motion:0.7 | VERB | -
wedges        | verbs_general:0.8 | VERB | -
forces        | verbs_general:0.8,physics:0.25 | VERB,NOUN | -
push          | verbs_general:0.85 | VERB | -
pushes        | verbs_general:0.85 | VERB | -
build         | verbs_general:0.9,bee_act:0.15 | VERB | -
builds        | verbs_general:0.9,bee_act:0.15 | VERB | -
turns         | verbs_general:0.9 | VERB | -
call          | verbs_general:0.9 | VERB | -
follows       | verbs_general:0.9 | VERB | -
shelter       | verbs_general:0.75,home:0.25 | VERB,NOUN | -
use           | verbs_general:0.9 | VERB | -
track         | verbs_academic:0.8,forecasting:0.25 | VERB,NOUN | -
shows         | verbs_general:0.9 | VERB | -
show          | verbs_general:0.9 | VERB | -
strengthen    | verbs_general:0.85 | VERB | -
issue         | verbs_general:0.85 | VERB,NOUN | -
give          | verbs_general:0.9 | VERB | -
fades         | verbs_general:0.85 | VERB | -
weakens       | verbs_general:0.85 | VERB | -
left          | verbs_general:0.9 | VERB | -
returns       | verbs_general:0.9 | VERB | -
return        | verbs_general:0.9,bee_act:0.15 | VERB | -
keep          | verbs_general:0.9 | VERB | -
keeps         | verbs_general:0.9 | VERB | -
watching      | verbs_general:0.9 | VERB | -
building      | verbs_general:0.9 | VERB | -
# ---- thunderstorm adjectives -----------------------------------------
warm          | adj_general:0.6,heat:0.6 | ADJ | 1.9
moist         | adj_general:0.4,moisture:0.8 | ADJ | 6.5
cooler        | adj_general:0.5,heat:-0.4 | ADJ | 3.6
unstable      | adj_general:0.6,sky_air:0.35,physics:0.3 | ADJ | 8.9
severe        | adj_general:0.5,storm:0.55 | ADJ | 7.0
damaging      | adj_general:0.6,storm:0.35 | ADJ | 6.2
strong        | adj_general:0.9 | ADJ | 2.7
strongest     | adj_general:0.9 | ADJ | 2.9
powerful      | adj_general:0.9 | ADJ | 4.3
high          | adj_general:0.9 | ADJ | 1.6
heavy         | adj_general:0.9 | ADJ | 2.5
heaviest      | adj_general:0.9 | ADJ | 2.8
large         | adj_general:0.9 | ADJ | 1.7
electrical    | adj_general:0.4,physics:0.75 | ADJ | 8.0
towering      | adj_general:0.8,lift_motion:0.25 | ADJ | 9.2
warmest       | adj_general:0.5,heat:0.6 | ADJ | 2.0
rising        | adj_general:0.4,lift_motion:0.7 | ADJ,VERB | 3.3
heated        | adj_general:0.5,heat:0.6 | ADJ,VERB | 3.4
dangerous     | adj_general:0.9 | ADJ | 4.7
new           | adj_general:0.9 | ADJ | 1.2
next          | adj_general:0.9 | ADJ | 1.4
local         | adj_general:0.9 | ADJ | 4.1

# ---- exoplanet passage nouns -----------------------------------------
planets       | planet:1.0 | NOUN | 3.9
planet        | planet:1.0 | NOUN | 3.7
exoplanets    | planet:0.95,scope:0.25 | NOUN | 12.3
exoplanet     | planet:0.95,scope:0.25 | NOUN | 12.2
worlds        | planet:0.85,space:0.3 | NOUN | 3.1
world         | planet:0.7,space:0.25,abstract:0.3 | NOUN | 1.8
orbit         | planet:0.8,space:0.35 | NOUN,VERB | 6.0
system        | planet:0.6,space:0.35,abstract:0.3 | NOUN | 4.9
stars         | star:1.0 | NOUN | 2.1
star          | star:1.0 | NOUN | 1.9
suns          | star:0.95,heat:0.25 | NOUN | 2.2
starlight     | star:0.85,scope:0.3 | NOUN | 6.7
dust          | star:0.35,space:0.45,nature:0.3 | NOUN | 2.6
gas           | physics:0.6,eruption:0.3,star:0.25 | NOUN | 4.4
light         | star:0.5,physics:0.55,scope:0.3 | NOUN | 1.5
telescope     | scope:1.0 | NOUN | 6.4
telescopes    | scope:1.0 | NOUN | 6.5
observatory   | scope:0.95,town:0.15 | NOUN | 9.7
mission       | scope:0.8,space:0.3 | NOUN | 5.3
missions      | scope:0.8,space:0.3 | NOUN | 5.4
observation   | scope:0.85,verbs_academic:0.3 | NOUN | 8.7
spacecraft    | scope:0.8,space:0.45 | NOUN | 7.0
signals       | scope:0.6,cell_info:0.45,physics:0.25 | NOUN | 5.8
signal        | scope:0.6,cell_info:0.35,physics:0.25 | NOUN | 5.7
light-years   | space:0.9,star:0.3 | NOUN | 9.9
distance      | space:0.5,abstract:0.5 | NOUN | 4.6
distances     | space:0.5,abstract:0.5 | NOUN | 4.8
dip           | scope:0.55,abstract:0.5 | NOUN | 5.1
dips          | scope:0.55,abstract:0.5 | NOUN | 5.2
depth         | abstract:0.6,scope:0.35 | NOUN | 4.2
timing        | abstract:0.65,time_misc:0.4 | NOUN | 6.1
size          | abstract:0.85 | NOUN | 1.9
patch         | abstract:0.75,nature:0.2 | NOUN | 4.0
night         | time_misc:0.8,sky_air:0.25 | NOUN | 1.3
years         | time_misc:0.95 | NOUN | 1.6
days          | time_misc:0.95 | NOUN | 1.1
dimming       | scope:0.55,star:0.35 | NOUN,VERB | 10.6
discovery     | abstract:0.6,verbs_academic:0.35,scope:0.25 | NOUN | 5.9
astronomers   | scope:0.6,star:0.45,people:0.3 | NOUN | 8.5
hints         | abstract:0.8 | NOUN | 4.4
pairs         | abstract:0.8 | NOUN | 3.2
questions     | abstract:0.85,school:0.2 | NOUN | 2.3
list          | abstract:0.8 | NOUN | 2.0
patience      | abstract:0.8,people:0.2 | NOUN | 5.5
reach         | abstract:0.8 | NOUN,VERB | 3.0
length        | abstract:0.8 | NOUN | 3.5
temperature   | physics:0.55,heat:0.5 | NOUN | 5.6
heat          | heat:1.0 | NOUN,VERB | 2.1
space telescope | scope:1.0,space:0.3 | MWE | -
# ---- exoplanet verbs/adjectives --------------------------------------
search        | verbs_academic:0.7,verbs_general:0.4 | VERB,NOUN | -
outshines     | verbs_general:0.6,star:0.4 | VERB | -
looking       | verbs_general:0.9 | VERB | -
measure       | verbs_academic:0.9 | VERB | -
crosses       | verbs_general:0.85 | VERB | -
dims          | verbs_general:0.6,scope:0.35 | VERB | -
tells         | verbs_general:0.9 | VERB | -
records       | verbs_academic:0.8 | VERB,NOUN | -
adds          | verbs_general:0.9 | VERB | -
found         | verbs_general:0.9 | VERB | -
glow          | verbs_general:0.6,heat:0.35,star:0.25 | VERB | -
blocks        | verbs_general:0.85 | VERB,NOUN | -
point         | verbs_general:0.8 | VERB,NOUN | -
reveals       | verbs_academic:0.85 | VERB | -
reveal        | verbs_academic:0.85 | VERB | -
repeats       | verbs_general:0.85 | VERB | -
hugs          | verbs_general:0.8 | VERB | -
combining     | verbs_academic:0.8 | VERB | -
estimate      | verbs_academic:0.9 | VERB,NOUN | -
travels       | verbs_general:0.85 | VERB | -
makes         | verbs_general:0.9 | VERB | -
make          | verbs_general:0.9,bee_act:0.15 | VERB | -
stay          | verbs_general:0.9,bee_act:0.1 | VERB | -
sees          | verbs_general:0.9 | VERB | -
host          | verbs_general:0.8 | VERB,NOUN | -
arranged      | verbs_general:0.85 | VERB | -
helps         | verbs_general:0.9 | VERB | -
understand    | verbs_academic:0.85 | VERB | -
surround      | verbs_general:0.85 | VERB | -
continues     | verbs_general:0.9 | VERB | -
compare       | verbs_academic:0.9 | VERB | -
joins         | verbs_general:0.85 | VERB | -
invites       | verbs_general:0.85 | VERB | -
answer        | verbs_academic:0.7,verbs_general:0.4 | VERB,NOUN | -
need          | verbs_general:0.9 | VERB | -
orbiting      | verbs_general:0.5,planet:0.5 | VERB | -
see           | verbs_general:0.9 | VERB | -
distant       | adj_general:0.7,space:0.35 | ADJ | 5.7
famous        | adj_general:0.9 | ADJ | 4.5
single        | adj_general:0.9 | ADJ | 3.3
small         | adj_general:0.9 | ADJ | 1.0
smallest      | adj_general:0.9 | ADJ | 1.5
close         | adj_general:0.9 | ADJ,VERB | 2.0
faint         | adj_general:0.7,star:0.25 | ADJ | 6.8
cold          | adj_general:0.6,heat:-0.4 | ADJ | 1.8
deep          | adj_general:0.9 | ADJ | 2.4
shallow       | adj_general:0.9 | ADJ | 5.3
rocky         | adj_general:0.6,lava_rock:0.45 | ADJ | 4.1
giant         | adj_general:0.85 | ADJ,NOUN | 3.0
wide          | adj_general:0.9 | ADJ | 2.3
nearby        | adj_general:0.9 | ADJ,ADV | 3.6
long          | adj_general:0.9 | ADJ | 1.3
careful       | adj_general:0.9 | ADJ | 3.1
young         | adj_general:0.9 | ADJ | 1.4
clear         | adj_general:0.9 | ADJ | 2.2
growing       | adj_general:0.8 | ADJ,VERB | 2.6
larger        | adj_general:0.9 | ADJ | 2.1
longer        | adj_general:0.9 | ADJ | 2.2
liquid        | adj_general:0.6,moisture:0.4,physics:0.25 | ADJ,NOUN | 5.0
right         | adj_general:0.9 | ADJ | 1.7
hard          | adj_general:0.9 | ADJ,ADV | 1.9
difficult     | adj_general:0.9 | ADJ | 4.8
own           | adj_general:0.8 | ADJ | 2.0

# ---- volcano passage nouns -------------------------------------------
volcano       | eruption:0.75,lava_rock:0.5,interior:0.35 | NOUN | 4.6
volcanoes     | eruption:0.75,lava_rock:0.5,interior:0.35 | NOUN | 4.8
eruption      | eruption:1.0 | NOUN | 7.1
eruptions     | eruption:1.0 | NOUN | 7.2
blast         | eruption:0.85,physics:0.25 | NOUN | 5.8
plume         | eruption:0.85,sky_air:0.25 | NOUN | 10.3
explosion     | eruption:0.8,physics:0.3 | NOUN | 5.4
ash           | eruption:0.85,lava_rock:0.3 | NOUN | 6.2
cinders       | eruption:0.75,lava_rock:0.4 | NOUN | 9.1
lava          | lava_rock:1.0,eruption:0.35 | NOUN | 5.9
magma         | lava_rock:0.9,interior:0.5 | NOUN | 8.3
rock          | lava_rock:0.95,terrain:0.3 | NOUN | 1.7
basalt        | lava_rock:0.95 | NOUN | 11.1
crater        | lava_rock:0.7,eruption:0.4,terrain:0.3 | NOUN | 7.7
cone          | lava_rock:0.7,abstract:0.25 | NOUN | 5.1
plug          | lava_rock:0.6,objects:0.3 | NOUN | 6.6
crust         | interior:0.9,terrain:0.35 | NOUN | 7.4
mantle        | interior:0.95 | NOUN | 9.5
chamber       | interior:0.85,home:0.2 | NOUN | 8.1
vent          | interior:0.8,eruption:0.35 | NOUN | 7.9
cracks        | interior:0.6,terrain:0.35 | NOUN | 3.8
pressure      | interior:0.55,physics:0.6 | NOUN | 6.3
earthquakes   | interior:0.6,terrain:0.45 | NOUN | 5.5
geologists    | interior:0.5,lava_rock:0.45,people:0.3,verbs_academic:0.2 | NOUN | 9.3
summit        | terrain:0.9,lava_rock:0.25 | NOUN | 8.0
island        | terrain:0.8,nature:0.4 | NOUN | 2.9
islands       | terrain:0.8,nature:0.4 | NOUN | 3.0
land          | terrain:0.85,nature:0.3 | NOUN | 1.6
sea           | nature:0.85,moisture:0.3 | NOUN | 1.9
waves         | nature:0.8,moisture:0.3,physics:0.2 | NOUN | 2.5
springs       | nature:0.75,heat:0.3 | NOUN | 4.3
geysers       | nature:0.5,eruption:0.5,heat:0.3 | NOUN | 9.9
soil          | terrain:0.85,nature:0.35 | NOUN | 3.1
farms         | town:0.5,nature:0.5 | NOUN | 2.4
crops         | nature:0.6,food:0.4 | NOUN | 3.9
layer         | abstract:0.7,terrain:0.3 | NOUN | 4.9
feet          | abstract:0.6,people:0.3 | NOUN | 1.5
signs         | abstract:0.8,forecasting:0.25 | NOUN | 2.7
clue          | abstract:0.85 | NOUN | 4.5
mixture       | abstract:0.6,physics:0.35,food:0.2 | NOUN | 5.2
surface       | terrain:0.5,abstract:0.5 | NOUN | 4.0
strength      | abstract:0.7,physics:0.35 | NOUN | 3.7
story         | abstract:0.8,arts:0.3 | NOUN | 1.8
lives         | people:0.6,abstract:0.4 | NOUN | 2.3
centuries     | time_misc:0.95 | NOUN | 5.6
day           | time_misc:0.95 | NOUN | 1.0
snow          | moisture:0.8,storm:0.25 | NOUN | 1.6
# ---- volcano verbs/adjectives ----------------------------------------
melt          | verbs_general:0.6,heat:0.5 | VERB | -
melts         | verbs_general:0.6,heat:0.5 | VERB | -
rise          | verbs_general:0.5,lift_motion:0.7 | VERB | -
climbs        | verbs_general:0.8,lift_motion:0.3 | VERB | -
climb         | verbs_general:0.8,lift_motion:0.3 | VERB | -
erupts        | verbs_general:0.4,eruption:0.8 | VERB | -
take          | verbs_general:0.9 | VERB | -
pours         | verbs_general:0.7,moisture:0.3 | VERB | -
spreads       | verbs_general:0.85 | VERB | -
spread        | verbs_general:0.85 | VERB | -
tears         | verbs_general:0.8 | VERB | -
hurls         | verbs_general:0.8 | VERB | -
drift         | verbs_general:0.7,sky_air:0.3 | VERB | -
settle        | verbs_general:0.85 | VERB | -
settled       | verbs_general:0.85 | VERB | -
settles       | verbs_general:0.85,bee_act:0.15 | VERB | -
behaves       | verbs_general:0.85 | VERB | -
contains      | verbs_general:0.9 | VERB | -
contain       | verbs_general:0.9 | VERB | -
flows         | verbs_general:0.6,lava_rock:0.3,moisture:0.25 | VERB | -
traps         | verbs_general:0.8 | VERB | -
trapped       | verbs_general:0.8 | ADJ,VERB | -
piles         | verbs_general:0.8 | VERB | -
seals         | verbs_general:0.8 | VERB | -
seal          | verbs_general:0.8,bee_act:0.15 | VERB | -
study         | verbs_academic:0.9 | VERB,NOUN | -
learn         | verbs_academic:0.85,school:0.25 | VERB | -
triggers      | verbs_general:0.8 | VERB | -
leaking       | verbs_general:0.8 | VERB | -
offers        | verbs_general:0.85 | VERB | -
changes       | verbs_general:0.9 | VERB,NOUN | -
nears         | verbs_general:0.8 | VERB | -
alert         | verbs_general:0.75,forecasting:0.3 | VERB,ADJ | -
save          | verbs_general:0.85 | VERB | -
ends          | verbs_general:0.9 | VERB | -
changing      | verbs_general:0.9 | VERB | -
hardens       | verbs_general:0.7,lava_rock:0.3 | VERB | -
collapse      | verbs_general:0.75,physics:0.25 | VERB,NOUN | -
carve         | verbs_general:0.8 | VERB | -
enriches      | verbs_general:0.8 | VERB | -
cools         | verbs_general:0.5,heat:-0.35,moisture:0.2 | VERB | -
stacks        | verbs_general:0.8 | VERB | -
began         | verbs_general:0.9 | VERB | -
powers        | verbs_general:0.7,physics:0.35 | VERB | -
drives        | verbs_general:0.85 | VERB | -
shape         | verbs_general:0.8 | VERB,NOUN | -
rest          | verbs_general:0.85 | VERB,NOUN | -
disappear     | verbs_general:0.85 | VERB | -
refills       | verbs_general:0.8 | VERB | -
wakes         | verbs_general:0.8 | VERB | -
reading       | verbs_academic:0.7,school:0.3 | VERB,NOUN | -
piece         | verbs_general:0.7 | VERB,NOUN | -
prepare       | verbs_general:0.85 | VERB | -
born          | verbs_general:0.8 | VERB | -
lighter       | adj_general:0.85 | ADJ | 2.8
solid         | adj_general:0.7,physics:0.3 | ADJ | 3.4
gentle        | adj_general:0.9 | ADJ | 3.2
violent       | adj_general:0.85 | ADJ | 5.1
shattered     | adj_general:0.85 | ADJ | 4.9
dark          | adj_general:0.9 | ADJ | 1.5
gray          | adj_general:0.9 | ADJ | 1.8
thin          | adj_general:0.9 | ADJ | 2.1
runny         | adj_general:0.85 | ADJ | 3.8
thick         | adj_general:0.9 | ADJ | 2.4
sticky        | adj_general:0.85 | ADJ | 2.9
broad         | adj_general:0.9 | ADJ | 4.2
steep         | adj_general:0.85,terrain:0.25 | ADJ | 4.4
sudden        | adj_general:0.9 | ADJ | 3.5
fresh         | adj_general:0.9 | ADJ | 2.3
old           | adj_general:0.9 | ADJ | 1.1
sleeping      | adj_general:0.8 | ADJ,VERB | 1.9
molten        | adj_general:0.5,lava_rock:0.6,heat:0.3 | ADJ | 9.4
glowing       | adj_general:0.7,heat:0.35 | ADJ,VERB | 3.7
many          | adj_general:0.8 | ADJ | 1.2
greater       | adj_general:0.9 | ADJ | 2.6
moving        | adj_general:0.7,lift_motion:0.3 | ADJ,VERB | 2.2

# ---- cells passage nouns ---------------------------------------------
cells         | cell_struct:1.0 | NOUN | 4.7
cell          | cell_struct:1.0 | NOUN | 4.5
membrane      | cell_struct:0.95 | NOUN | 9.8
membranes     | cell_struct:0.95 | NOUN | 9.9
nucleus       | cell_struct:0.9,cell_info:0.3 | NOUN | 9.2
cytoplasm     | cell_struct:0.95 | NOUN | 10.7
wall          | cell_struct:0.55,objects:0.45,home:0.25 | NOUN | 1.9
receptors     | cell_struct:0.6,cell_info:0.5 | NOUN | 11.3
compartment   | cell_struct:0.55,abstract:0.4,objects:0.25 | NOUN | 7.5
structures    | abstract:0.6,cell_struct:0.35,objects:0.25 | NOUN | 6.4
mitochondria  | cell_energy:0.95,cell_struct:0.4 | NOUN | 11.6
glucose       | cell_energy:0.9,food:0.25 | NOUN | 10.1
sugar         | cell_energy:0.6,food:0.55 | NOUN | 2.6
energy        | cell_energy:0.55,physics:0.6 | NOUN | 4.1
photosynthesis | cell_energy:0.85,organism:0.4 | NOUN | 10.9
chloroplasts  | cell_energy:0.7,organism:0.45,cell_struct:0.3 | NOUN | 11.4
sunlight      | heat:0.7,cell_energy:0.3,star:0.2 | NOUN | 3.3
blood         | organism:0.8,people:0.2 | NOUN | 2.7
proteins      | cell_energy:0.5,organism:0.45,cell_info:0.3 | NOUN | 8.6
protein       | cell_energy:0.5,organism:0.45,cell_info:0.3 | NOUN | 8.4
organisms     | organism:0.95 | NOUN | 9.0
organism      | organism:0.95 | NOUN | 8.8
bacteria      | organism:0.8,cell_struct:0.35 | NOUN | 7.8
tissues       | organism:0.85,cell_struct:0.35 | NOUN | 7.3
plant         | organism:0.75,nature:0.45 | NOUN | 1.8
plants        | organism:0.75,nature:0.45 | NOUN | 1.9
animals       | organism:0.7,nature:0.5 | NOUN | 1.6
leaf          | organism:0.6,nature:0.55 | NOUN | 2.0
leaves        | organism:0.6,nature:0.55 | NOUN,VERB | 2.1
skin          | organism:0.75,people:0.3 | NOUN | 2.2
muscle        | organism:0.8,people:0.25 | NOUN | 4.3
nerve         | organism:0.8,cell_info:0.3 | NOUN | 5.6
life          | organism:0.6,abstract:0.45 | NOUN | 1.7
instructions  | cell_info:0.85,abstract:0.35 | NOUN | 5.3
information   | cell_info:0.75,abstract:0.45 | NOUN | 4.4
set           | cell_info:0.4,abstract:0.6 | NOUN,VERB | 2.1
nutrients     | cell_energy:0.5,organism:0.4,food:0.3 | NOUN | 7.6
wastes        | organism:0.4,abstract:0.45 | NOUN | 5.0
center        | abstract:0.8 | NOUN | 2.5
parts         | abstract:0.85,objects:0.2 | NOUN | 1.8
part          | abstract:0.85 | NOUN | 1.5
way           | abstract:0.9 | NOUN | 1.1
moment        | time_misc:0.85,abstract:0.25 | NOUN | 3.4
equipment     | objects:0.8,work:0.3 | NOUN | 5.5
materials     | objects:0.6,abstract:0.45 | NOUN | 4.6
division      | abstract:0.55,cell_struct:0.45 | NOUN | 5.8
divisions     | abstract:0.55,cell_struct:0.45 | NOUN | 6.0
work          | abstract:0.6,work:0.55 | NOUN,VERB | 1.3
thing         | abstract:0.9 | NOUN | 1.1
tips          | abstract:0.6,organism:0.3 | NOUN | 3.6
nerve cell    | organism:0.7,cell_struct:0.6,cell_info:0.3 | MWE | -
skin cell     | organism:0.7,cell_struct:0.6 | MWE | -
muscle cell   | organism:0.7,cell_struct:0.6 | MWE | -
# ---- cells verbs/adjectives ------------------------------------------
built         | verbs_general:0.9 | VERB | -
respond       | verbs_general:0.85 | VERB | -
divide        | verbs_general:0.6,cell_struct:0.4 | VERB | -
divides       | verbs_general:0.6,cell_struct:0.4 | VERB | -
consist       | verbs_general:0.85 | VERB | -
organized     | verbs_general:0.85 | VERB | -
wrapped       | verbs_general:0.8 | VERB | -
separates     | verbs_general:0.8 | VERB | -
controls      | verbs_general:0.85 | VERB | -
enter         | verbs_general:0.9 | VERB | -
leave         | verbs_general:0.9,bee_act:0.1 | VERB | -
sits          | verbs_general:0.85 | VERB | -
stores        | verbs_general:0.8,bee_act:0.15 | VERB | -
tell          | verbs_general:0.9 | VERB | -
needs         | verbs_general:0.9 | VERB | -
copies        | verbs_general:0.8,cell_info:0.3 | VERB,NOUN | -
receives      | verbs_general:0.85 | VERB | -
reads         | verbs_general:0.8,cell_info:0.3,school:0.2 | VERB | -
read          | verbs_general:0.8,school:0.2 | VERB | -
behave        | verbs_general:0.85 | VERB | -
carrying      | verbs_general:0.85 | VERB | -
release       | verbs_general:0.8,physics:0.25 | VERB,NOUN | -
releases      | verbs_general:0.8,physics:0.25 | VERB | -
released      | verbs_general:0.8,physics:0.25 | VERB | -
breaking      | verbs_general:0.85 | VERB | -
capture       | verbs_general:0.8 | VERB | -
eat           | verbs_general:0.85,food:0.3 | VERB | -
packed        | verbs_general:0.8 | VERB | -
look          | verbs_general:0.9 | VERB | -
talk          | verbs_general:0.85 | VERB | -
crowd         | verbs_general:0.8 | VERB,NOUN | -
doubles       | verbs_general:0.8 | VERB | -
splits        | verbs_general:0.8 | VERB | -
heals         | verbs_general:0.8,organism:0.3 | VERB | -
trading       | verbs_general:0.8 | VERB | -
releasing     | verbs_general:0.8 | VERB | -
ignored       | verbs_general:0.85 | VERB | -
stop          | verbs_general:0.9 | VERB | -
surrounds     | verbs_general:0.85 | VERB | -
gives         | verbs_general:0.9 | VERB | -
living        | adj_general:0.7,organism:0.4 | ADJ | 2.4
tiny          | adj_general:0.9 | ADJ | 1.6
jellylike     | adj_general:0.8 | ADJ | 6.9
whole         | adj_general:0.9 | ADJ | 1.9
healthy       | adj_general:0.85,organism:0.25 | ADJ | 3.0
extra         | adj_general:0.9 | ADJ | 2.5
busy          | adj_general:0.9 | ADJ | 2.0
quiet         | adj_general:0.9 | ADJ | 2.1
stiff         | adj_general:0.85 | ADJ | 4.0
green         | adj_general:0.85,nature:0.3 | ADJ | 1.2
simple        | adj_general:0.9 | ADJ | 2.7
complete      | adj_general:0.9 | ADJ | 3.2
matching      | adj_general:0.85 | ADJ | 3.3
chemical      | adj_general:0.5,physics:0.6 | ADJ | 7.7
taller        | adj_general:0.9 | ADJ | 1.8
alive         | adj_general:0.85,organism:0.3 | ADJ | 2.6
countless     | adj_general:0.85 | ADJ | 5.2

# ---- beehive passage -------------------------------------------------
bees          | bees:1.0 | NOUN | 1.4
hive          | bees:1.0 | NOUN | 3.6
colony        | bees:0.95,organism:0.2 | NOUN | 5.7
queen         | bees:0.9,people:0.2 | NOUN | 2.4
workers       | bees:0.85,work:0.3 | NOUN | 2.8
nectar        | bees:0.9,food:0.3,nature:0.25 | NOUN | 6.6
pollen        | bees:0.9,nature:0.35 | NOUN | 6.9
honey         | bees:0.9,food:0.4 | NOUN | 2.3
honeycomb     | bees:0.95 | NOUN | 6.1
swarm         | bees:0.9 | NOUN | 5.9
live          | verbs_general:0.9 | VERB | -
raises        | verbs_general:0.85,bee_act:0.2 | VERB | -
stays         | verbs_general:0.9 | VERB | -
fly           | verbs_general:0.7,bee_act:0.4 | VERB | -
forage        | bee_act:0.9,verbs_general:0.3 | VERB | -
visit         | verbs_general:0.85 | VERB | -
blooms        | bee_act:0.4,nature:0.6 | VERB | -
sip           | bee_act:0.7,verbs_general:0.4,food:0.2 | VERB | -
gathered      | verbs_general:0.85,bee_act:0.2 | VERB | -
dance         | bee_act:0.5,verbs_general:0.5,arts:0.3 | VERB,NOUN | -
waits         | verbs_general:0.85 | VERB | -
tend          | verbs_general:0.8,bee_act:0.25 | VERB | -
guard         | verbs_general:0.8,bee_act:0.2 | VERB | -
hum           | bee_act:0.6,verbs_general:0.4,arts:0.2 | VERB | -
go            | verbs_general:0.9 | VERB | -
golden        | adj_general:0.85,bees:0.15 | ADJ | 3.1
sweet         | adj_general:0.8,food:0.35 | ADJ | 1.7
sweetest      | adj_general:0.8,food:0.35 | ADJ | 2.0
share         | verbs_general:0.85,bee_act:0.15 | VERB | -

# ---- remaining shared verbs / adjectives / nouns ----------------------
called        | verbs_general:0.9 | VERB | -
control       | verbs_general:0.8,abstract:0.25 | VERB,NOUN | -
existing      | adj_general:0.8 | ADJ | 4.3
passes        | verbs_general:0.85 | VERB | -
working       | adj_general:0.7,work:0.35 | ADJ,VERB | 2.0
continue      | verbs_general:0.9 | VERB | -
cooling       | adj_general:0.5,heat:-0.35,verbs_general:0.3 | ADJ,VERB | 3.5
depending     | verbs_general:0.85 | VERB | -
fills         | verbs_general:0.85 | VERB | -
swelling      | verbs_general:0.6,lift_motion:0.3 | NOUN,VERB | 5.4
blur          | abstract:0.6,scope:0.25 | NOUN,VERB | 5.3
mountain      | terrain:1.0 | NOUN | 2.5
space         | space:0.9,star:0.2 | NOUN | 2.5
sheets        | abstract:0.6,objects:0.35,home:0.2 | NOUN | 2.4
thousands     | abstract:0.8 | NOUN | 2.7
"""

SUPPLY = """
# ---- weather supply (TOD candidates for the storm passage) -----------
forecast      | forecasting:0.75,storm:0.4 | 5.8
blizzard      | storm:0.85,moisture:0.35 | 4.9
cyclone       | storm:0.95 | 9.3
hurricane     | storm:0.95 | 5.6
monsoon       | storm:0.8,moisture:0.45 | 10.4
sleet         | moisture:0.85,storm:0.3 | 7.1
drizzle       | moisture:0.85,storm:0.2 | 6.2
downpour      | moisture:0.8,storm:0.4 | 6.6
rainfall      | moisture:0.9,storm:0.25 | 5.2
snowfall      | moisture:0.85,storm:0.25 | 4.4
fog           | moisture:0.65,sky_air:0.45 | 2.9
frost         | moisture:0.7,heat:-0.25 | 3.4
dew           | moisture:0.8,nature:0.25 | 4.1
humidity      | moisture:0.75,sky_air:0.4 | 8.6
breeze        | storm:0.45,sky_air:0.6 | 3.7
squall        | storm:0.9,moisture:0.25 | 11.2
whirlwind     | storm:0.9,lift_motion:0.3 | 6.4
windstorm     | storm:0.95 | 7.7
rainstorm     | storm:0.85,moisture:0.4 | 4.2
snowstorm     | storm:0.85,moisture:0.4 | 3.9
hailstorm     | storm:0.9,moisture:0.3 | 8.1
thundercloud  | storm:0.7,sky_air:0.55 | 7.3
hailstone     | storm:0.65,moisture:0.45 | 6.7
raindrop      | moisture:0.9 | 3.1
cloudburst    | storm:0.7,moisture:0.5 | 10.8
barometer     | forecasting:0.85,physics:0.25 | 11.4
thermometer   | forecasting:0.7,heat:0.35 | 7.9
meteorology   | forecasting:0.85,storm:0.35,verbs_academic:0.2 | 12.1
forecaster    | forecasting:0.9,people:0.25 | 8.3
gale          | storm:0.9 | 9.8
tempest       | storm:0.9 | 12.6
thunderclap   | storm:0.9 | 7.5
rainbow       | moisture:0.5,sky_air:0.5 | 1.5
snowflake     | moisture:0.8,storm:0.2 | 1.7
puddle        | moisture:0.75,nature:0.3 | 1.8
mist          | moisture:0.8,sky_air:0.3 | 2.1
mud           | moisture:0.4,terrain:0.55 | 1.6
umbrella      | moisture:0.5,objects:0.45 | 1.9
raincoat      | moisture:0.55,objects:0.4 | 2.0
kite          | sky_air:0.45,objects:0.45 | 1.8
# ---- astronomy supply -------------------------------------------------
asteroid      | space:0.8,planet:0.4 | 6.8
comet         | space:0.8,star:0.3 | 5.4
meteor        | space:0.85,sky_air:0.2 | 6.1
meteorite     | space:0.8,lava_rock:0.25 | 7.9
nebula        | star:0.7,space:0.55 | 11.0
supernova     | star:0.85,space:0.35 | 10.5
constellation | star:0.75,sky_air:0.3,space:0.3 | 7.4
eclipse       | star:0.6,space:0.5,sky_air:0.2 | 6.3
quasar        | star:0.7,space:0.5 | 12.8
satellite     | scope:0.6,space:0.55 | 6.0
probe         | scope:0.7,space:0.45 | 7.2
rover         | scope:0.6,space:0.4,planet:0.3 | 5.0
astronaut     | space:0.7,people:0.4,scope:0.25 | 4.3
astronomy     | scope:0.6,star:0.5,verbs_academic:0.3 | 8.9
cosmos        | space:0.9,star:0.3 | 9.6
planetarium   | scope:0.6,space:0.4,school:0.3 | 8.2
moonlight     | star:0.5,sky_air:0.4,space:0.3 | 3.5
sunspot       | star:0.8,heat:0.3 | 9.0
gravity       | physics:0.7,space:0.45 | 5.7
horizon       | sky_air:0.55,space:0.4,terrain:0.3 | 5.3
galaxy        | space:0.85,star:0.4 | 6.6
universe      | space:0.9,star:0.3 | 5.1
moon          | planet:0.6,space:0.5,sky_air:0.2 | 1.7
orbiter       | scope:0.65,space:0.45,planet:0.3 | 9.4
lander        | scope:0.6,space:0.4,planet:0.3 | 8.7
stardust      | star:0.7,space:0.45 | 8.0
parallax      | scope:0.7,verbs_academic:0.3,space:0.25 | 12.9
transit       | scope:0.75,planet:0.3 | 10.0
spectrum      | scope:0.6,physics:0.5 | 9.8
rocket        | space:0.6,scope:0.35 | 2.2
spaceship     | space:0.65,scope:0.35 | 2.0
starship      | space:0.6,scope:0.35 | 5.2
stargazer     | star:0.45,scope:0.35,people:0.3 | 5.6
alien         | space:0.55,organism:0.25 | 2.4
sunrise       | star:0.4,sky_air:0.4,heat:0.3 | 1.8
moonbeam      | star:0.45,sky_air:0.4 | 2.6
# ---- volcano supply ---------------------------------------------------
geyser        | nature:0.5,eruption:0.5,heat:0.3 | 9.7
earthquake    | interior:0.6,terrain:0.45 | 5.3
tremor        | interior:0.65,terrain:0.4 | 8.8
caldera       | lava_rock:0.7,eruption:0.4,terrain:0.3 | 12.4
pumice        | lava_rock:0.85,eruption:0.3 | 11.7
obsidian      | lava_rock:0.9 | 10.6
cinder        | eruption:0.7,lava_rock:0.45 | 8.9
fumarole      | eruption:0.6,interior:0.5 | 13.0
geologist     | interior:0.5,lava_rock:0.45,people:0.3,verbs_academic:0.2 | 9.2
seismograph   | interior:0.55,forecasting:0.4,physics:0.25 | 11.9
bedrock       | lava_rock:0.7,terrain:0.45 | 7.6
boulder       | lava_rock:0.6,terrain:0.5 | 4.7
sediment      | terrain:0.6,lava_rock:0.4,nature:0.25 | 8.5
fault         | interior:0.7,terrain:0.35 | 6.7
fissure       | interior:0.7,terrain:0.3 | 10.2
foothill      | terrain:0.85 | 7.1
granite       | lava_rock:0.85,terrain:0.25 | 7.8
quartz        | lava_rock:0.8 | 8.3
mineral       | lava_rock:0.7,nature:0.3 | 6.5
gravel        | terrain:0.6,lava_rock:0.4 | 4.8
pebble        | terrain:0.55,lava_rock:0.4,nature:0.25 | 3.2
cliff         | terrain:0.9 | 3.9
canyon        | terrain:0.9 | 5.2
ridge         | terrain:0.9 | 6.0
valley        | terrain:0.9,nature:0.25 | 3.3
plateau       | terrain:0.85 | 8.4
stone         | lava_rock:0.6,terrain:0.45 | 1.5
dirt          | terrain:0.7,nature:0.3 | 1.6
hill          | terrain:0.9 | 1.4
cave          | terrain:0.6,interior:0.35 | 2.5
peak          | terrain:0.85 | 3.4
smoke         | eruption:0.45,sky_air:0.35 | 2.2
flame         | heat:0.5,eruption:0.35 | 2.0
steam         | eruption:0.45,heat:0.35,moisture:0.4 | 3.7
# ---- cells supply ------------------------------------------------------
bacterium     | organism:0.8,cell_struct:0.35 | 10.4
enzyme        | cell_energy:0.7,organism:0.35 | 10.8
chromosome    | cell_info:0.75,cell_struct:0.4 | 9.6
gene          | cell_info:0.8,organism:0.3 | 7.0
ribosome      | cell_struct:0.75,cell_info:0.4 | 12.0
organelle     | cell_struct:0.85 | 11.8
vacuole       | cell_struct:0.8 | 11.5
molecule      | physics:0.6,cell_energy:0.4 | 8.1
oxygen        | physics:0.5,organism:0.4,sky_air:0.3 | 5.4
algae         | organism:0.75,nature:0.4 | 7.2
fungus        | organism:0.75,nature:0.35 | 6.8
microbe       | organism:0.8,cell_struct:0.3 | 9.1
microscope    | scope:0.55,cell_struct:0.5,school:0.2 | 6.2
biologist     | organism:0.55,people:0.35,verbs_academic:0.3 | 8.6
chlorophyll   | cell_energy:0.75,organism:0.4 | 11.2
cellulose     | cell_struct:0.6,organism:0.4,cell_energy:0.25 | 12.5
virus         | organism:0.7,cell_struct:0.35 | 6.4
yeast         | organism:0.6,food:0.4 | 7.5
amoeba        | organism:0.75,cell_struct:0.35 | 10.0
plankton      | organism:0.7,nature:0.4 | 9.3
biology       | organism:0.6,verbs_academic:0.4,school:0.3 | 7.3
genome        | cell_info:0.8,organism:0.3 | 11.1
hormone       | organism:0.7,cell_info:0.3 | 9.5
antibody      | organism:0.7,cell_struct:0.3 | 10.3
metabolism    | cell_energy:0.75,organism:0.35 | 11.0
respiration   | cell_energy:0.7,organism:0.4 | 9.9
germ          | organism:0.7,cell_struct:0.3 | 2.3
bug           | organism:0.6,nature:0.35 | 1.5
seed          | nature:0.5,organism:0.45 | 1.8
root          | nature:0.5,organism:0.45 | 2.0
stem          | nature:0.5,organism:0.45 | 2.4
petal         | nature:0.6,organism:0.35 | 3.0
body          | organism:0.65,people:0.3 | 1.4
bone          | organism:0.7,people:0.2 | 2.1
heart         | organism:0.7,people:0.25 | 1.6
brain         | organism:0.7,cell_info:0.25 | 2.5
egg           | organism:0.6,food:0.3 | 1.3
fur           | organism:0.6,nature:0.25 | 1.9
# ---- bees supply -------------------------------------------------------
beekeeper     | bees:0.8,people:0.35,work:0.2 | 6.3
apiary        | bees:0.85,town:0.2 | 12.7
larva         | bees:0.6,organism:0.5 | 8.7
drone         | bees:0.75,work:0.2 | 7.0
beeswax       | bees:0.8,objects:0.25 | 7.4
bumblebee     | bees:0.85,nature:0.3 | 4.0
wasp          | bees:0.7,nature:0.4 | 4.6
hornet        | bees:0.7,nature:0.4 | 6.1
pollination   | bees:0.7,nature:0.45 | 9.4
pollinator    | bees:0.75,nature:0.4 | 10.1
honeybee      | bees:0.9 | 4.2
propolis      | bees:0.8 | 13.0
beehive       | bees:0.9 | 4.9
flowers       | nature:0.6,bees:0.5 | 1.5
blossom       | nature:0.6,bees:0.45 | 4.5
orchard       | nature:0.55,bees:0.4,food:0.25 | 6.0
meadow        | nature:0.65,bees:0.35 | 5.5
garden        | nature:0.6,bees:0.3,home:0.3 | 1.9
clover        | nature:0.6,bees:0.45 | 6.7
lavender      | nature:0.6,bees:0.4 | 8.0
wildflower    | nature:0.65,bees:0.45 | 6.9
stinger       | bees:0.75,organism:0.25 | 5.8
insect        | organism:0.6,bees:0.45,nature:0.3 | 4.1
brood         | bees:0.7,organism:0.3 | 9.0
forager       | bees:0.7,work:0.25 | 10.7
nest          | bees:0.55,nature:0.5 | 2.5
comb          | bees:0.75,objects:0.25 | 5.0
# ---- generic distractor supply ----------------------------------------
classroom     | school:0.9 | 2.4
teacher       | school:0.85,people:0.35 | 1.6
homework      | school:0.9 | 2.8
pencil        | school:0.8,objects:0.35 | 1.5
notebook      | school:0.8,objects:0.35 | 3.0
lesson        | school:0.85 | 3.1
chalk         | school:0.75,objects:0.3 | 2.7
desk          | school:0.7,objects:0.4,work:0.25 | 2.0
student       | school:0.85,people:0.35 | 2.9
recess        | school:0.8,time_misc:0.2 | 4.3
backpack      | school:0.75,objects:0.35 | 3.5
library       | school:0.7,town:0.35,arts:0.2 | 3.2
dictionary    | school:0.75,arts:0.3 | 5.6
eraser        | school:0.75,objects:0.35 | 3.8
kitchen       | home:0.9 | 2.1
blanket       | home:0.8,objects:0.35 | 2.3
pillow        | home:0.8,objects:0.35 | 2.5
sofa          | home:0.85,objects:0.3 | 3.7
curtain       | home:0.8,objects:0.3 | 4.5
hallway       | home:0.75,town:0.25 | 4.0
doorway       | home:0.8 | 3.9
ladder        | home:0.6,objects:0.45,work:0.25 | 3.4
broom         | home:0.75,objects:0.35 | 2.6
drawer        | home:0.8,objects:0.3 | 3.6
mirror        | home:0.7,objects:0.4 | 2.8
candle        | home:0.7,objects:0.35 | 3.3
carpet        | home:0.8,objects:0.25 | 4.2
lantern       | home:0.6,objects:0.45 | 5.9
bread         | food:0.9 | 1.4
cheese        | food:0.9 | 1.8
soup          | food:0.9 | 1.7
butter        | food:0.85 | 2.2
noodle        | food:0.85 | 3.0
pastry        | food:0.85 | 6.2
raisin        | food:0.8,nature:0.2 | 4.4
spice         | food:0.8 | 5.0
vinegar       | food:0.8 | 6.5
jam           | food:0.85 | 2.9
biscuit       | food:0.85 | 4.6
pancake       | food:0.85 | 2.7
lettuce       | food:0.8,nature:0.25 | 4.0
salary        | work:0.85,abstract:0.2 | 7.8
office        | work:0.85,town:0.25 | 3.1
contract      | work:0.8,abstract:0.3 | 7.2
invoice       | work:0.85 | 9.8
customer      | work:0.8,people:0.3 | 4.7
manager       | work:0.8,people:0.35 | 5.3
meeting       | work:0.8,people:0.25 | 3.8
budget        | work:0.8,abstract:0.25 | 6.9
receipt       | work:0.8,objects:0.2 | 6.3
warehouse     | work:0.7,town:0.35,objects:0.2 | 7.4
uniform       | work:0.6,objects:0.4,school:0.2 | 5.7
paycheck      | work:0.85 | 6.1
violin        | arts:0.85,objects:0.25 | 5.2
painting      | arts:0.85 | 3.4
novel         | arts:0.8,school:0.25 | 5.8
poem          | arts:0.85,school:0.25 | 3.9
theater       | arts:0.8,town:0.3 | 5.1
ballet        | arts:0.85 | 7.6
chess         | arts:0.75,school:0.2 | 5.4
puzzle        | arts:0.7,objects:0.3 | 3.6
trumpet       | arts:0.8,objects:0.3 | 4.9
sculpture     | arts:0.85,objects:0.2 | 7.7
melody        | arts:0.85 | 6.6
orchestra     | arts:0.85,people:0.2 | 7.9
sidewalk      | town:0.85 | 3.7
bakery        | town:0.7,food:0.45 | 4.8
fountain      | town:0.75,nature:0.25 | 5.5
alley         | town:0.85 | 6.4
harbor        | town:0.7,nature:0.35 | 6.8
bridge        | town:0.8,objects:0.25 | 2.5
subway        | town:0.85 | 5.0
courtyard     | town:0.8,home:0.25 | 7.5
plaza         | town:0.85 | 8.6
mailbox       | town:0.7,home:0.3,objects:0.25 | 3.5
dog           | home:0.5,nature:0.4 | 1.0
cat           | home:0.5,nature:0.4 | 1.0
ball          | objects:0.7,school:0.2 | 1.2
shoe          | objects:0.75,home:0.2 | 1.3
hat           | objects:0.75,home:0.2 | 1.2
cake          | food:0.85 | 1.5
milk          | food:0.85 | 1.3
bed           | home:0.85 | 1.1
box           | objects:0.8,home:0.2 | 1.4
toy           | objects:0.7,home:0.3 | 1.2
sock          | objects:0.75,home:0.25 | 1.5
coat          | objects:0.7,home:0.25 | 1.6
boot          | objects:0.75 | 1.7
bell          | objects:0.7,school:0.25 | 1.6
drum          | arts:0.6,objects:0.4 | 1.8
boat          | town:0.5,objects:0.45 | 1.5
car           | town:0.6,objects:0.4 | 1.1
bus           | town:0.65,objects:0.35 | 1.3
truck         | town:0.6,objects:0.4 | 1.4
wagon         | town:0.5,objects:0.45 | 2.0
spoon         | home:0.5,food:0.4,objects:0.3 | 1.6
fork          | home:0.5,food:0.4,objects:0.3 | 1.7
bowl          | home:0.5,food:0.4,objects:0.3 | 1.5
pan           | home:0.55,food:0.4 | 1.8
mop           | home:0.7,objects:0.3 | 2.1
rug           | home:0.75,objects:0.25 | 1.9
lamp          | home:0.7,objects:0.3 | 1.7
bench         | town:0.5,home:0.35,objects:0.3 | 2.0
stool         | home:0.6,objects:0.35 | 2.1
shelf         | home:0.65,objects:0.35 | 1.9
couch         | home:0.75,objects:0.25 | 1.8
game          | arts:0.6,school:0.3 | 1.3
song          | arts:0.8 | 1.2
book          | school:0.6,arts:0.4 | 1.1
page          | school:0.55,arts:0.3,objects:0.2 | 1.5
crayon        | school:0.75,arts:0.3 | 1.6
glue          | school:0.6,objects:0.35 | 1.9
tent          | nature:0.4,objects:0.5 | 2.0
rope          | objects:0.75,work:0.2 | 1.8
fence         | home:0.5,town:0.4,objects:0.25 | 2.1
gate          | home:0.5,town:0.4 | 1.9
yard          | home:0.6,town:0.3,nature:0.25 | 1.6
porch         | home:0.75,town:0.2 | 2.1
store         | town:0.7,work:0.3 | 1.4
shop          | town:0.7,work:0.3 | 1.5
helmet        | objects:0.7,work:0.3 | 4.1
whistle       | objects:0.7,arts:0.25 | 3.2
stadium       | town:0.7,people:0.3 | 5.9
referee       | people:0.6,work:0.4 | 6.7
trophy        | objects:0.7,abstract:0.2 | 5.6
sweater       | objects:0.75,home:0.3 | 3.8
sandal        | objects:0.8 | 4.9
ribbon        | objects:0.8,arts:0.2 | 3.1
button        | objects:0.85 | 2.4
pocket        | objects:0.8 | 2.3
zipper        | objects:0.85 | 3.9
napkin        | home:0.6,food:0.35 | 2.6
basket        | home:0.6,objects:0.35 | 2.8
jacket        | objects:0.75,home:0.25 | 3.0
closet        | home:0.8 | 3.3
garage        | home:0.65,town:0.3 | 3.6
suitcase      | objects:0.7,home:0.3 | 4.2
calendar      | home:0.5,work:0.4,time_misc:0.2 | 4.4
envelope      | objects:0.6,work:0.35 | 4.6
magnet        | objects:0.7,school:0.25 | 4.7
cafeteria     | school:0.6,food:0.4 | 5.0
hammock       | home:0.6,nature:0.3 | 5.1
barbershop    | town:0.7,work:0.3 | 5.3
wallpaper     | home:0.75,arts:0.2 | 5.4
billboard     | town:0.75,work:0.2 | 5.5
escalator     | town:0.6,objects:0.4 | 5.7
thermos       | objects:0.7,food:0.3 | 5.8
gymnasium     | school:0.65,town:0.3 | 6.0
auditorium    | school:0.6,town:0.35,arts:0.2 | 6.1
briefcase     | work:0.65,objects:0.35 | 6.3
chandelier    | home:0.65,objects:0.3,arts:0.2 | 6.8
pamphlet      | school:0.5,work:0.4,arts:0.2 | 7.0
corridor      | town:0.5,home:0.4 | 7.1
turnstile     | town:0.7,objects:0.3 | 7.3
upholstery    | home:0.65,objects:0.3 | 8.2
ledger        | work:0.75,school:0.2 | 8.4
stipend       | work:0.8 | 8.8
annuity       | work:0.8 | 9.6
metronome     | arts:0.7,objects:0.3 | 9.2
colonnade     | town:0.6,arts:0.35 | 10.2
vestibule     | home:0.55,town:0.4 | 10.6
escritoire    | home:0.5,arts:0.3,objects:0.3 | 11.6
"""

SUPPLY_MWES = """
cold front    | storm:0.6,forecasting:0.45,heat:-0.2 | weather
warm front    | storm:0.55,forecasting:0.45,heat:0.25 | weather
jet stream    | sky_air:0.7,storm:0.4,lift_motion:0.3 | weather
water cycle   | moisture:0.8,nature:0.35 | weather
dew point     | moisture:0.7,forecasting:0.4 | weather
storm surge   | storm:0.8,nature:0.35,moisture:0.3 | weather
weather balloon | forecasting:0.75,sky_air:0.4 | weather
heat wave     | heat:0.75,storm:0.35,forecasting:0.25 | weather
air mass      | sky_air:0.8,storm:0.3,forecasting:0.25 | weather
wind shear    | storm:0.65,sky_air:0.45,lift_motion:0.3 | weather
solar system  | planet:0.7,star:0.5,space:0.4 | astro
space station | space:0.7,scope:0.5 | astro
black hole    | space:0.8,star:0.45,physics:0.3 | astro
red giant     | star:0.85,space:0.3 | astro
radio telescope | scope:0.9,space:0.3 | astro
star cluster  | star:0.8,space:0.4 | astro
night sky     | sky_air:0.7,space:0.5,star:0.3 | astro
solar wind    | star:0.6,space:0.5,physics:0.3 | astro
space probe   | scope:0.7,space:0.5 | astro
dwarf planet  | planet:0.85,space:0.35 | astro
lava flow     | lava_rock:0.85,eruption:0.4 | volcano
ash cloud     | eruption:0.75,sky_air:0.4 | volcano
hot spring    | nature:0.6,heat:0.5,interior:0.25 | volcano
magma chamber | interior:0.75,lava_rock:0.55 | volcano
plate tectonics | interior:0.8,terrain:0.35,verbs_academic:0.2 | volcano
volcanic rock | lava_rock:0.9,eruption:0.35 | volcano
steam vent    | interior:0.6,eruption:0.45,moisture:0.3 | volcano
amino acid    | cell_energy:0.6,cell_info:0.45,physics:0.25 | cells
cell division | cell_struct:0.8,cell_info:0.35 | cells
cell wall     | cell_struct:0.85,objects:0.2 | cells
genetic code  | cell_info:0.85,organism:0.3 | cells
blood cell    | organism:0.7,cell_struct:0.55 | cells
queen bee     | bees:0.9,people:0.15 | bees
worker bee    | bees:0.9,work:0.2 | bees
honey bee     | bees:0.95 | bees
royal jelly   | bees:0.75,food:0.35 | bees
bee colony    | bees:0.9,organism:0.2 | bees
dinner table  | home:0.75,food:0.4 | generic
parking lot   | town:0.8,objects:0.2 | generic
phone call    | work:0.5,home:0.4,people:0.25 | generic
coffee cup    | food:0.55,objects:0.45,home:0.25 | generic
birthday party | home:0.6,people:0.4,food:0.25 | generic
shopping cart | town:0.6,objects:0.45,food:0.2 | generic
tennis court  | town:0.6,objects:0.3,people:0.25 | generic
swimming pool | town:0.55,home:0.35,nature:0.25 | generic
traffic light | town:0.8,objects:0.3 | generic
front door    | home:0.8,objects:0.3 | generic
post office   | town:0.75,work:0.35 | generic
train station | town:0.8,work:0.25 | generic
paper clip    | objects:0.75,work:0.35,school:0.2 | generic
rocking chair | home:0.75,objects:0.4 | generic
""".strip()

# Words that only exist as MWE constituents still need grades (the MWE
# grade rule takes the max constituent grade) and co-occurrence counts.
CONSTITUENT_WORDS = {
    "front": 4.3, "jet": 5.1, "stream": 3.3, "cycle": 5.9, "balloon": 3.0,
    "wave": 2.8, "shear": 11.6, "mass": 6.0, "solar": 7.0, "station": 3.4,
    "black": 1.2, "hole": 1.9, "red": 1.0, "radio": 3.6, "cluster": 7.1,
    "flow": 3.8, "hot": 1.3, "spring": 2.3, "plate": 2.6, "tectonics": 12.2,
    "volcanic": 8.7, "steam": 3.7, "amino": 12.0, "acid": 6.1,
    "genetic": 8.9, "code": 4.5, "bee": 1.6, "worker": 3.0, "royal": 4.7,
    "jelly": 2.9, "dinner": 1.9, "table": 1.5, "parking": 3.2, "lot": 2.0,
    "phone": 2.2, "coffee": 2.7, "cup": 1.4, "birthday": 1.8, "party": 2.0,
    "shopping": 2.6, "cart": 3.1, "tennis": 4.0, "court": 3.5,
    "swimming": 2.8, "pool": 2.4, "traffic": 3.9, "door": 1.3, "post": 2.9,
    "train": 1.7, "paper": 1.6, "clip": 3.7, "rocking": 3.4, "chair": 1.5,
}

# Adverbs: tagged ADV, filtered from topical analysis, no vectors needed.
ADVERBS = """
quickly slowly closely fast hard carefully directly slightly suddenly
repeatedly unevenly upward outward downhill underground nearby away
together apart first often sometimes usually already again still yet
far farther ahead behind above below inside outside somewhere wherever
completely differently gently violently well hardest
""".split()

STOPLISTS = {
    "function_words": """
        the a an of in on at to from with within by for as and or but nor
        into over under up down near when while because if than then that
        this it its they their them we our you your he she her him his
        not no also most more some many much few each every all both other
        another such there here about against along among around before
        after between during through until upon without toward across
        behind off out so too very just even once only like whatever
        wherever anything nothing something everything anyone someone
        others one two three yes own per enough any else same several
        instead beyond themselves back beneath front
    """.split(),
    "interrogatives": "what which who whom whose where why how".split(),
    "demonstratives": "this that these those".split(),
    "do_be_have": "do does did done is are was were be been being am have has had having".split(),
    "modals": "can could may might must shall should will would".split(),
}

TOKEN_RE = re.compile(r"[a-z0-9]+(?:['\-][a-z0-9]+)*", re.IGNORECASE)

DOMAIN_GROUPS = {
    "weather": {"storm", "moisture", "sky_air", "heat", "lift_motion", "forecasting"},
    "astro": {"planet", "star", "scope", "space"},
    "volcano": {"eruption", "lava_rock", "interior", "terrain"},
    "cells": {"cell_struct", "cell_energy", "organism", "cell_info"},
    "bees": {"bees", "bee_act"},
}


def h64(text):
    return int.from_bytes(hashlib.sha256(text.encode()).digest()[:8], "big")


def auto_grade(word):
    return round(1.0 + (h64("grade:" + word) % 120) / 10.0, 1)


def jitter(word):
    out = []
    for i in range(JITTER_DIMS):
        u = (h64(f"jit:{i}:{word}") % 10_000_000) / 10_000_000.0
        v = (h64(f"jit2:{i}:{word}") % 10_000_000) / 10_000_000.0
        # Box-Muller
        z = math.sqrt(-2.0 * math.log(max(u, 1e-9))) * math.cos(2 * math.pi * v)
        out.append(z * JITTER_SCALE)
    return out


def vector_for(word, axes):
    v = [0.0] * DIM
    for axis, weight in axes.items():
        if axis == "verbs_general":
            sub = VERB_SUBAXES[h64("verbsub:" + word) % len(VERB_SUBAXES)]
            v[AXES.index(axis)] += weight * 0.3
            v[AXES.index(sub)] += weight * 0.8
        elif axis == "adj_general":
            sub = ADJ_SUBAXES[h64("adjsub:" + word) % len(ADJ_SUBAXES)]
            v[AXES.index(axis)] += weight * 0.3
            v[AXES.index(sub)] += weight * 0.8
        else:
            v[AXES.index(axis)] += weight
    for i, j in enumerate(jitter(word)):
        v[len(AXES) + i] = j
    return v


def parse_axes(spec):
    axes = {}
    if spec.strip() == "-":
        return axes
    for part in spec.split(","):
        name, _, weight = part.strip().partition(":")
        axes[name] = float(weight)
        assert name in AXES, f"unknown axis {name}"
    return axes


def parse_vocab():
    entries = {}
    for raw in VOCAB.strip().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        word, axis_spec, pos_spec, grade_spec = [f.strip() for f in line.split("|")]
        grade = None if grade_spec == "-" else float(grade_spec)
        if grade is None:
            grade = auto_grade(word)
        pos = None if pos_spec == "-" else pos_spec.split(",")
        is_mwe = pos_spec == "MWE"
        assert word not in entries, f"duplicate vocab entry {word}"
        entries[word] = {
            "axes": parse_axes(axis_spec),
            "pos": None if is_mwe else pos,
            "grade": grade if not is_mwe else None,
            "mwe": is_mwe,
            "supply": False,
        }
    for raw in SUPPLY.strip().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        word, axis_spec, grade_spec = [f.strip() for f in line.split("|")]
        assert word not in entries, f"duplicate supply entry {word}"
        entries[word] = {
            "axes": parse_axes(axis_spec),
            "pos": ["NOUN"],
            "grade": float(grade_spec),
            "mwe": False,
            "supply": True,
        }
    for raw in SUPPLY_MWES.strip().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        phrase, axis_spec, _domain = [f.strip() for f in line.split("|")]
        assert phrase not in entries, f"duplicate MWE {phrase}"
        entries[phrase] = {
            "axes": parse_axes(axis_spec),
            "pos": None,
            "grade": None,
            "mwe": True,
            "supply": True,
        }
    return entries


def tokenize(text):
    tokens = []
    for raw in TOKEN_RE.findall(text.lower().replace("’", "'")):
        token = raw.strip("-'")
        if token.endswith("'s"):
            token = token[:-2]
        token = token.strip("-'")
        if token:
            tokens.append(token)
    return tokens


def domain_of(axes):
    best, best_weight = None, 0.0
    for domain, members in DOMAIN_GROUPS.items():
        weight = sum(w for a, w in axes.items() if a in members and w > 0)
        if weight > best_weight:
            best, best_weight = domain, weight
    return best if best_weight >= 0.3 else None


def main():
    entries = parse_vocab()
    stop_all = set()
    for words in STOPLISTS.values():
        stop_all.update(words)

    # --- passage coverage checks ---
    passages = {}
    for name in os.listdir(PASSAGE_DIR):
        if name.endswith(".txt"):
            with open(os.path.join(PASSAGE_DIR, name)) as fh:
                passages[name] = tokenize(fh.read())
    problems = []
    for name, tokens in sorted(passages.items()):
        for token in sorted(set(tokens)):
            if token in stop_all or any(c.isdigit() for c in token):
                continue
            if token in ADVERBS:
                continue
            if token == "cumulonimbus":
                continue  # deliberate out-of-POS-lexicon word
            if token not in entries:
                problems.append(f"{name}: '{token}' missing from vocab")
    if problems:
        print("\n".join(problems))
        sys.exit(1)

    # beehive must contribute exactly its ten nouns
    bee_nouns = set()
    for token in set(passages["beehive.txt"]):
        entry = entries.get(token)
        if entry and entry["pos"] and entry["pos"][0] == "NOUN":
            bee_nouns.add(token)
    expected = {
        "bees", "hive", "colony", "queen", "workers",
        "nectar", "pollen", "honey", "honeycomb", "swarm",
    }
    assert bee_nouns == expected, f"beehive nouns drifted: {sorted(bee_nouns ^ expected)}"

    # --- derive counts ---
    total_contexts = 300_000
    unigrams = {}
    all_words = {w: e for w, e in entries.items() if not e["mwe"]}
    for word, entry in all_words.items():
        grade = entry["grade"] if entry["grade"] is not None else auto_grade(word)
        base = int(12_000 / (1.0 + grade))
        unigrams[word] = base + (h64("count:" + word) % 97)
    for word, grade in CONSTITUENT_WORDS.items():
        if word not in unigrams:
            base = int(12_000 / (1.0 + grade))
            unigrams[word] = base + (h64("count:" + word) % 97)

    pairs = {}
    by_domain = {}
    for word, entry in all_words.items():
        domain = domain_of(entry["axes"])
        if domain:
            by_domain.setdefault(domain, []).append(word)
    for domain, words in by_domain.items():
        words = sorted(words)
        for i, a in enumerate(words):
            for b in words[i + 1:]:
                strength = 0.10 + 0.12 * ((h64(f"pair:{a}:{b}") % 1000) / 1000.0)
                count = max(1, int(min(unigrams[a], unigrams[b]) * strength))
                pairs[(a, b)] = count

    # --- emit files ---
    os.makedirs(OUT_DIR, exist_ok=True)

    def out(name):
        return open(os.path.join(OUT_DIR, name), "w")

    with out("embeddings.tsv") as fh:
        fh.write(f"dim={DIM}\n")
        for word in sorted(entries):
            entry = entries[word]
            if not entry["axes"]:
                continue
            vec = vector_for(word, entry["axes"])
            fh.write(word + "\t" + " ".join(f"{c:.6f}" for c in vec) + "\n")

    with out("mwes.txt") as fh:
        for word in sorted(entries):
            if entries[word]["mwe"]:
                fh.write(word + "\n")

    with out("grades.tsv") as fh:
        graded = {}
        for word, entry in entries.items():
            if not entry["mwe"] and entry["grade"] is not None:
                graded[word] = entry["grade"]
        for word, grade in CONSTITUENT_WORDS.items():
            graded.setdefault(word, grade)
        for word in sorted(graded):
            fh.write(f"{word}\t{graded[word]}\n")

    with out("cooc.tsv") as fh:
        fh.write(f"contexts={total_contexts}\n")
        for word in sorted(unigrams):
            fh.write(f"U\t{word}\t{unigrams[word]}\n")
        for (a, b) in sorted(pairs):
            fh.write(f"P\t{a}\t{b}\t{pairs[(a, b)]}\n")

    with out("pos.tsv") as fh:
        rows = {}
        for word, entry in entries.items():
            if entry["mwe"] or entry["pos"] is None:
                continue
            rows[word] = ",".join(entry["pos"])
        for word in ADVERBS:
            rows.setdefault(word, "ADV")
        for word in sorted(rows):
            fh.write(f"{word}\t{rows[word]}\n")

    with out("nouns.txt") as fh:
        for word in sorted(entries):
            entry = entries[word]
            if entry["supply"] and not entry["mwe"]:
                fh.write(word + "\n")

    for name, words in STOPLISTS.items():
        with out(f"stop_{name}.txt") as fh:
            for word in sorted(set(words)):
                fh.write(word + "\n")

    with out("manifest.toml") as fh:
        fh.write(
            "[files]\n"
            'embeddings = "embeddings.tsv"\n'
            'mwes = "mwes.txt"\n'
            'grades = "grades.tsv"\n'
            'cooccurrence = "cooc.tsv"\n'
            'pos = "pos.tsv"\n'
            'nouns = "nouns.txt"\n'
            "\n[stoplists]\n"
            'function_words = "stop_function_words.txt"\n'
            'interrogatives = "stop_interrogatives.txt"\n'
            'demonstratives = "stop_demonstratives.txt"\n'
            'do_be_have = "stop_do_be_have.txt"\n'
            'modals = "stop_modals.txt"\n'
        )

    n_embed = sum(1 for e in entries.values() if e["axes"])
    n_mwe = sum(1 for e in entries.values() if e["mwe"])
    n_supply = sum(1 for e in entries.values() if e["supply"] and not e["mwe"])
    print(f"axes: {len(AXES)}  dim: {DIM}")
    print(f"embeddings: {n_embed}  mwes: {n_mwe}  supply nouns: {n_supply}")
    print(f"unigrams: {len(unigrams)}  pairs: {len(pairs)}")
    for name, tokens in sorted(passages.items()):
        print(f"{name}: {len(tokens)} tokens, {len(set(tokens))} types")


if __name__ == "__main__":
    main()
