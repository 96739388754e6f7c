// Copyright (c) 2026, The semnet Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "semnet/network.hpp"

namespace semnet::corpus {

/// One set, no relations.
inline Network t1() { return {"T1", {{"A", {"a1", "a2"}}}, {}, {"A"}}; }

/// A constant function X -> Y.
inline Network t2() {
  return {"T2",
          {{"X", {"x1", "x2"}}, {"Y", {"y1", "y2"}}},
          {{"f", {"X"}, {"Y"}, {{"x1", "y1"}, {"x2", "y1"}}}},
          {"X"}};
}

/// x1 maps to two outputs, x2 to none.
inline Network t3() {
  return {"T3",
          {{"X", {"x1", "x2"}}, {"Y", {"y1", "y2"}}},
          {{"f", {"X"}, {"Y"}, {{"x1", "y1"}, {"x1", "y2"}}}},
          {"X"}};
}

/// Bijective chain X -> M -> Y.
inline Network t4() {
  return {"T4",
          {{"X", {"x1", "x2"}}, {"M", {"m1", "m2"}}, {"Y", {"y1", "y2"}}},
          {{"f", {"X"}, {"M"}, {{"x1", "m1"}, {"x2", "m2"}}}, {"g", {"M"}, {"Y"}, {{"m1", "y1"}, {"m2", "y2"}}}},
          {"X"}};
}

/// T4 storing the intermediate as well.
inline Network t4b() {
  Network net = t4();
  net.name = "T4b";
  net.data_selection = {"X", "M"};
  return net;
}

/// T4 with both intermediates collapsing onto y1.
inline Network t4_merge() {
  Network net = t4();
  net.name = "T4-merge";
  net.relations[1].rows = {{"m1", "y1"}, {"m2", "y1"}};
  return net;
}

// --- fig1-mini: pitch interpretation --------------------------------------
//
// Pitches are (diatonic step, alteration) with step 28 = C4. Every set domain
// is derived from the sounding pitches and transpositions so that each
// sounding pitch can be written under every clef, key and transposition;
// relation rows come from standard notation arithmetic and are kept only when
// their output lies inside the target domain.

struct Fig1Options {
  std::string name = "fig1-mini";
  /// Highest representable MIDI key.
  int midi_max = 127;
  /// Spell every altered pitch with an explicit accidental, even where the
  /// key signature already implies it.
  bool dodecaphonic = false;
};

namespace detail {

struct Pitch {
  int step;
  int alter;

  friend auto operator<=>(const Pitch&, const Pitch&) = default;
};

inline constexpr int kLetterSemitones[7] = {0, 2, 4, 5, 7, 9, 11};
inline constexpr char kLetters[7] = {'C', 'D', 'E', 'F', 'G', 'A', 'B'};

inline int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
inline int letter_of(int step) { return step - 7 * floor_div(step, 7); }
inline int octave_of(int step) { return floor_div(step, 7); }
inline int natural_midi(int step) { return 12 * (octave_of(step) + 1) + kLetterSemitones[letter_of(step)]; }
inline int midi_of(Pitch p) { return natural_midi(p.step) + p.alter; }

inline std::string pitch_class_name(Pitch p) {
  std::string out(1, kLetters[letter_of(p.step)]);
  out += p.alter > 0 ? std::string(static_cast<std::size_t>(p.alter), '#')
                     : std::string(static_cast<std::size_t>(-p.alter), 'b');
  return out;
}
inline std::string generic_name(int step) { return kLetters[letter_of(step)] + std::to_string(octave_of(step)); }
inline std::string pitch_name(Pitch p) { return pitch_class_name(p) + std::to_string(octave_of(p.step)); }

inline std::string fixed3(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

struct Clef {
  std::string name;
  int bottom_line_step;
};

struct Transposition {
  std::string name;
  int steps;      // written = sounding + steps
  int semitones;  // in half steps
};

// Frequency ratios above C, both tunings anchored on C.
inline const std::map<std::string, std::map<std::string, double>>& tuning_ratios() {
  static const std::map<std::string, std::map<std::string, double>> ratios = {
      {"pythagorean", {{"C", 1.0}, {"D", 9.0 / 8}, {"E", 81.0 / 64}, {"F#", 729.0 / 512}, {"G", 3.0 / 2}}},
      {"just", {{"C", 1.0}, {"D", 9.0 / 8}, {"E", 5.0 / 4}, {"F#", 45.0 / 32}, {"G", 3.0 / 2}}},
  };
  return ratios;
}

template <class T>
void add_unique(std::vector<T>& list, const T& item) {
  if (std::find(list.begin(), list.end(), item) == list.end()) list.push_back(item);
}

}  // namespace detail

/// Desk-scale pitch interpretation network with small hand-chosen domains.
/// The data selection stores clef, key signature, instrument transposition,
/// tuning system and sounding pitch.
inline Network build_fig1_mini(const Fig1Options& options = {}) {
  using namespace detail;
  const std::vector<Clef> clefs = {{"treble", 30}, {"soprano", 28}};
  const std::vector<std::string> keys = {"C", "G"};  // G major sharpens F
  const std::vector<Transposition> transpositions = {{"C", 0, 0}, {"Bb", 1, 2}};
  const std::vector<std::string> tunings = {"pythagorean", "just"};
  const std::vector<std::string> accidentals = {"none", "sharp", "sharp-prev"};
  const std::vector<std::string> scope_rules = {"bar", "note"};
  const std::vector<Pitch> sounding = {{29, 0}, {30, 0}};  // D4 E4
  const double c4_hz = 261.626;

  std::vector<Pitch> written;
  for (const auto& t : transpositions) {
    for (Pitch p : sounding) {
      const int step = p.step + t.steps;
      add_unique(written, Pitch{step, midi_of(p) + t.semitones - natural_midi(step)});
    }
  }
  std::sort(written.begin(), written.end());
  std::vector<int> generic;
  for (Pitch p : written) add_unique(generic, p.step);
  std::vector<int> positions;
  for (const auto& clef : clefs) {
    for (int step : generic) add_unique(positions, step - clef.bottom_line_step);
  }
  std::sort(positions.begin(), positions.end());

  auto in = [](const auto& list, const auto& item) { return std::find(list.begin(), list.end(), item) != list.end(); };

  Network net;
  net.name = options.name;
  auto add_set = [&](std::string id, std::vector<std::string> values) { net.sets.push_back({std::move(id), std::move(values)}); };
  auto names = [](const auto& list, auto fn) {
    std::vector<std::string> out;
    for (const auto& item : list) add_unique(out, fn(item));
    return out;
  };

  std::vector<int> midi_keys;
  for (Pitch p : sounding) {
    if (midi_of(p) <= options.midi_max) add_unique(midi_keys, midi_of(p));
  }
  std::vector<std::string> frq_classes;
  std::vector<std::string> frequencies;
  for (const auto& tuning : tunings) {
    for (Pitch p : sounding) {
      const double cents = 1200.0 * std::log2(tuning_ratios().at(tuning).at(pitch_class_name(p)));
      add_unique(frq_classes, fixed3(cents));
      add_unique(frequencies, fixed3(c4_hz * std::exp2(octave_of(p.step) - 4 + cents / 1200.0)));
    }
  }

  add_set("Clef", names(clefs, [](const Clef& c) { return c.name; }));
  add_set("NoteheadPos", names(positions, [](int p) { return std::to_string(p); }));
  add_set("GenericPitch", names(generic, generic_name));
  add_set("Accidental", accidentals);
  add_set("ScopeRule", scope_rules);
  add_set("RelevantAcc", {"none", "sharp"});
  add_set("KeySig", keys);
  add_set("NotatedSP", names(written, pitch_name));
  add_set("InstrTranspo", names(transpositions, [](const Transposition& t) { return t.name; }));
  add_set("SoundingSP", names(sounding, pitch_name));
  add_set("MidiKey", names(midi_keys, [](int k) { return std::to_string(k); }));
  add_set("Octave", names(sounding, [](Pitch p) { return std::to_string(octave_of(p.step)); }));
  add_set("SPC", names(sounding, pitch_class_name));
  add_set("Tuning", tunings);
  add_set("FrqClass", frq_classes);
  add_set("Frequency", frequencies);

  Relation gp{"generic_pitch", {"Clef", "NoteheadPos"}, {"GenericPitch"}, {}};
  for (const auto& clef : clefs) {
    for (int pos : positions) {
      const int step = clef.bottom_line_step + pos;
      if (in(generic, step)) gp.rows.push_back({clef.name, std::to_string(pos), generic_name(step)});
    }
  }

  // An earlier sharp on the same staff position carries over only under the
  // bar rule.
  Relation relevant{"relevant_acc", {"NoteheadPos", "Accidental", "ScopeRule"}, {"RelevantAcc"}, {}};
  for (int pos : positions) {
    for (const auto& acc : accidentals) {
      for (const auto& rule : scope_rules) {
        const bool sharp = acc == "sharp" || (acc == "sharp-prev" && rule == "bar");
        relevant.rows.push_back({std::to_string(pos), acc, rule, sharp ? "sharp" : "none"});
      }
    }
  }

  Relation notated{"notated_sp", {"GenericPitch", "RelevantAcc", "KeySig"}, {"NotatedSP"}, {}};
  for (int step : generic) {
    for (const std::string acc : {"none", "sharp"}) {
      for (const auto& key : keys) {
        const bool key_sharp = !options.dodecaphonic && key == "G" && kLetters[letter_of(step)] == 'F';
        const Pitch p{step, (acc == "sharp" || key_sharp) ? 1 : 0};
        if (in(written, p)) notated.rows.push_back({generic_name(step), acc, key, pitch_name(p)});
      }
    }
  }

  Relation sounding_rel{"sounding_sp", {"NotatedSP", "InstrTranspo"}, {"SoundingSP"}, {}};
  for (Pitch w : written) {
    for (const auto& t : transpositions) {
      const int step = w.step - t.steps;
      const Pitch s{step, midi_of(w) - t.semitones - natural_midi(step)};
      if (in(sounding, s)) sounding_rel.rows.push_back({pitch_name(w), t.name, pitch_name(s)});
    }
  }

  Relation midi{"midi_key", {"SoundingSP"}, {"MidiKey"}, {}};
  for (Pitch s : sounding) {
    if (in(midi_keys, midi_of(s))) midi.rows.push_back({pitch_name(s), std::to_string(midi_of(s))});
  }

  Relation split{"split_pitch", {"SoundingSP"}, {"Octave", "SPC"}, {}};
  for (Pitch s : sounding) split.rows.push_back({pitch_name(s), std::to_string(octave_of(s.step)), pitch_class_name(s)});

  // Both tunings are anchored on C, so the key signature does not move the
  // frequency class.
  Relation fx{"frq_class", {"SPC", "Tuning", "KeySig"}, {"FrqClass"}, {}};
  for (const auto& spc : names(sounding, pitch_class_name)) {
    for (const auto& tuning : tunings) {
      for (const auto& key : keys) {
        fx.rows.push_back({spc, tuning, key, fixed3(1200.0 * std::log2(tuning_ratios().at(tuning).at(spc)))});
      }
    }
  }

  Relation freq{"frequency", {"FrqClass", "Octave"}, {"Frequency"}, {}};
  std::vector<std::string> seen;
  for (const auto& tuning : tunings) {
    for (Pitch p : sounding) {
      const double cents = 1200.0 * std::log2(tuning_ratios().at(tuning).at(pitch_class_name(p)));
      const std::string octave = std::to_string(octave_of(p.step));
      const std::string key = fixed3(cents) + "/" + octave;
      if (in(seen, key)) continue;
      seen.push_back(key);
      freq.rows.push_back({fixed3(cents), octave, fixed3(c4_hz * std::exp2(octave_of(p.step) - 4 + cents / 1200.0))});
    }
  }

  net.relations = {gp, relevant, notated, sounding_rel, midi, split, fx, freq};
  net.data_selection = {"Clef", "KeySig", "InstrTranspo", "Tuning", "SoundingSP"};
  return net;
}

/// Same network with MIDI keys capped below E4, so one storable sounding
/// pitch cannot be produced.
inline Network build_fig1_mini_out_of_range() {
  return build_fig1_mini({.name = "fig1-mini-out-of-range", .midi_max = 63});
}

/// Same network under the rule that every altered pitch class is always
/// written with its accidental.
inline Network build_fig1_mini_dodecaphonic() {
  return build_fig1_mini({.name = "fig1-mini-dodecaphonic", .dodecaphonic = true});
}

struct CorpusEntry {
  std::string file;  // relative to the corpus directory
  Network network;
};

/// Every shipped, valid corpus network.
inline std::vector<CorpusEntry> entries() {
  return {
      {"t1.semnet", t1()},
      {"t2.semnet", t2()},
      {"t3.semnet", t3()},
      {"t4.semnet", t4()},
      {"t4b.semnet", t4b()},
      {"t4-merge.semnet", t4_merge()},
      {"fig1-mini.semnet", build_fig1_mini()},
      {"fig1-mini-out-of-range.semnet", build_fig1_mini_out_of_range()},
      {"fig1-mini-dodecaphonic.semnet", build_fig1_mini_dodecaphonic()},
  };
}

}  // namespace semnet::corpus
