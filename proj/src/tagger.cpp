#include <algorithm>
#include <string>
#include <unordered_map>

#include "textgraph/textprep.hpp"
#include "text_util.hpp"

namespace textgraph {
namespace {

// Closed lexicon consulted before the suffix rules. It mostly lists words the
// suffix rules would get wrong: nouns ending in -al/-ed/-ing, adjectives
// ending in -ed, and frequent verbs and adverbs of news text.
const std::unordered_map<std::string, PosTag>& lexicon() {
  static const std::unordered_map<std::string, PosTag> table = [] {
    std::unordered_map<std::string, PosTag> t;
    const auto add = [&t](PosTag tag, std::initializer_list<const char*> words) {
      for (const char* w : words) t.emplace(w, tag);
    };
    add(PosTag::kNoun, {
        "disposal", "arrival", "approval", "proposal", "rival", "rivals", "capital", "hospital", "festival",
        "signal", "animal", "criminal", "criminals", "official", "officials", "individual", "journal",
        "terminal", "trial", "withdrawal", "renewal", "survival", "refusal", "referral", "denial",
        "funeral", "interval", "material", "metal", "general", "generals", "rebel", "rebels", "principal",
        "professional", "radical", "radicals", "liberal", "liberals", "mortal", "tribunal", "arsenal",
        "building", "buildings", "meeting", "meetings", "wedding", "evening", "morning", "ceiling",
        "feeling", "feelings", "hearing", "briefing", "bombing", "bombings", "kidnapping", "kidnappings",
        "killing", "killings", "shooting", "uprising", "offering", "ending", "beginning", "spring",
        "string", "thing", "things", "king", "ring", "wing", "hundred", "hundreds", "bed", "need",
        "needs", "seed", "speed", "shed", "creed", "greed", "bloodshed", "sled", "deed", "steed",
        "standoff", "hostage", "hostages", "guerrilla", "guerrillas", "guerilla", "guerillas",
        "government", "police", "embassy", "ambassador", "ambassadors", "residence", "house", "leader",
        "leaders", "chief", "group", "movement", "president", "minister", "cabinet", "prisoners",
        "prisoner", "release", "statement", "talks", "people", "guests", "reception", "compound",
        "city", "country", "war", "attack", "attackers", "crisis", "demands", "sympathy", "support",
        "waiters", "waiter", "champagne", "guards", "army", "troops", "forces", "station", "radio",
        "ceremony", "siege", "deal", "demand", "report", "negotiations", "negotiator", "negotiators"});
    add(PosTag::kAdj, {
        "armed", "well-armed", "red", "new", "old", "high", "low", "large", "small", "big",
        "long", "short", "young", "major", "minor", "local", "foreign", "public", "private", "military",
        "top", "senior", "former", "early", "late", "last", "first", "second", "third", "final", "main",
        "many", "several", "few", "diplomatic", "elegant", "glittering", "remaining", "leading",
        "united", "limited", "detailed", "advanced", "experienced", "talented", "interested",
        "concerned", "imprisoned", "jailed", "wounded", "injured", "masked", "excited", "close",
        "direct", "full", "free", "great", "good", "bad", "strong", "weak", "hard", "dark", "deep",
        "illegal", "legal", "national", "international", "political", "regional", "federal", "total",
        "global", "central", "social", "critical", "crucial", "medical", "royal", "annual", "actual",
        "entire", "whole", "different", "japanese", "american", "european", "crimson",
        "communist", "maoist", "rebel-held", "emergency", "secret", "quiet", "silent", "tense", "calm"});
    add(PosTag::kVerb, {
        "said", "says", "say", "told", "tell", "held", "hold", "holds", "took", "take", "takes", "made",
        "make", "makes", "went", "go", "goes", "came", "come", "comes", "gave", "give", "gives", "got",
        "get", "gets", "saw", "see", "sees", "left", "leave", "leaves", "kept", "keep", "keeps", "met",
        "meet", "meets", "ran", "run", "runs", "began", "begin", "begins", "stood", "stand", "stands",
        "seized", "freed", "threatened", "demanded", "called", "captured", "surrendered",
        "stormed", "entered", "posed", "sneaked", "slipped", "remain", "remains", "remained",
        "want", "wants", "wanted", "lost", "lose", "won", "win", "fought", "fight", "sent", "send",
        "spent", "spend", "knew", "know", "known", "thought", "think", "brought", "bring", "found",
        "find", "became", "become", "becomes", "sought", "seek", "seeks", "hid", "hide", "fled", "flee",
        "flees", "fell", "fall", "falls", "struck", "strike", "strikes", "broke", "break", "breaks", "spoke",
        "speak", "speaks", "wrote", "write", "writes", "shot", "shoot", "drove", "drive", "rose", "rise",
        "led", "lead", "leads", "paid", "pay", "pays", "heard", "hear", "felt", "feel", "chose", "choose",
        "bore", "bear"});
    add(PosTag::kOther, {
        "also", "heavily", "still", "already", "now", "later", "never", "often", "soon", "yet", "even", "just",
        "however", "inside", "outside", "within", "without", "among", "across", "around", "near",
        "though", "although", "unless", "whether", "since", "ago", "almost", "nearly", "perhaps",
        "quickly", "slowly", "directly", "tonight", "today", "tomorrow", "yesterday", "mr", "mrs",
        "ms", "dr"});
    return t;
  }();
  return table;
}

bool has_letter(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char c) {
    return detail::is_ascii_alpha(c) || static_cast<unsigned char>(c) >= 0x80;
  });
}

// A suffix only counts when at least three characters remain before it.
bool has_suffix(std::string_view word, std::string_view suffix) {
  return word.size() >= suffix.size() + 3 && word.ends_with(suffix);
}

PosTag tag_word(std::string_view surface, const StopWords& stopwords) {
  const std::string lower = detail::ascii_lower(surface);
  if (stopwords.contains(lower)) return PosTag::kStop;
  if (!has_letter(lower)) return PosTag::kOther;
  if (const auto it = lexicon().find(lower); it != lexicon().end()) return it->second;

  for (std::string_view suffix : {"ous", "ive", "al", "able"}) {
    if (has_suffix(lower, suffix)) return PosTag::kAdj;
  }
  for (std::string_view suffix : {"tion", "ment", "ness", "ity"}) {
    if (has_suffix(lower, suffix)) return PosTag::kNoun;
  }
  for (std::string_view suffix : {"ize", "ed", "ing"}) {
    if (has_suffix(lower, suffix)) return PosTag::kVerb;
  }
  return PosTag::kNoun;
}

}  // namespace

void tag_pos(std::span<Token> tokens, const StopWords& stopwords) {
  for (Token& token : tokens) token.pos_tag = tag_word(token.surface, stopwords);
}

}  // namespace textgraph
