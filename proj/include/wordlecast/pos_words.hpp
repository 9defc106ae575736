#pragma once

#include <cstddef>

namespace wordlecast::words {

/// Part-of-speech codes: 0 unknown, 1 noun, 2 verb, 3 adjective,
/// 4 adverb, 5 other (pronouns, determiners, interjections...).
struct PosEntry {
    const char* word;
    int code;
};

/// Small embedded lexicon of common five-letter words tagged by their
/// dominant part of speech.  Words outside this table resolve to 0.
inline const PosEntry* embedded_pos_table(std::size_t* count) {
    static const PosEntry table[] = {
        {"aback", 4},  {"abase", 2},  {"abate", 2},  {"abbey", 1},  {"abide", 2},
        {"about", 5},  {"above", 5},  {"abuse", 2},  {"actor", 1},  {"acute", 3},
        {"adapt", 2},  {"admit", 2},  {"adobe", 1},  {"adopt", 2},  {"adult", 1},
        {"again", 4},  {"agate", 1},  {"agent", 1},  {"agile", 3},  {"aging", 2},
        {"agree", 2},  {"ahead", 4},  {"aisle", 1},  {"alarm", 1},  {"album", 1},
        {"alert", 3},  {"alien", 1},  {"align", 2},  {"alike", 3},  {"alive", 3},
        {"allow", 2},  {"alloy", 1},  {"aloft", 4},  {"alone", 3},  {"along", 5},
        {"aloud", 4},  {"alpha", 1},  {"altar", 1},  {"alter", 2},  {"amber", 1},
        {"amble", 2},  {"amend", 2},  {"amiss", 4},  {"among", 5},  {"ample", 3},
        {"angel", 1},  {"anger", 1},  {"angle", 1},  {"angry", 3},  {"ankle", 1},
        {"annul", 2},  {"anode", 1},  {"antic", 1},  {"anvil", 1},  {"aorta", 1},
        {"apart", 4},  {"aphid", 1},  {"apple", 1},  {"apply", 2},  {"apron", 1},
        {"aptly", 4},  {"arbor", 1},  {"ardor", 1},  {"arena", 1},  {"argue", 2},
        {"arise", 2},  {"armor", 1},  {"aroma", 1},  {"arrow", 1},  {"ashen", 3},
        {"aside", 4},  {"askew", 3},  {"assay", 1},  {"asset", 1},  {"atoll", 1},
        {"atone", 2},  {"attic", 1},  {"audio", 1},  {"audit", 1},  {"augur", 2},
        {"avail", 2},  {"avert", 2},  {"avoid", 2},  {"await", 2},  {"awake", 2},
        {"award", 1},  {"aware", 3},  {"awful", 3},  {"axial", 3},  {"axiom", 1},
        {"azure", 3},  {"bacon", 1},  {"badge", 1},  {"badly", 4},  {"bagel", 1},
        {"baker", 1},  {"balmy", 3},  {"banal", 3},  {"banjo", 1},  {"barge", 1},
        {"basic", 3},  {"basil", 1},  {"basin", 1},  {"baste", 2},  {"batch", 1},
        {"baton", 1},  {"bayou", 1},  {"beach", 1},  {"beady", 3},  {"beast", 1},
        {"began", 2},  {"begin", 2},  {"beige", 3},  {"being", 1},  {"belch", 2},
        {"belly", 1},  {"below", 5},  {"bench", 1},  {"berry", 1},  {"berth", 1},
        {"bevel", 1},  {"bezel", 1},  {"bible", 1},  {"bicep", 1},  {"bilge", 1},
        {"binge", 2},  {"biome", 1},  {"birch", 1},  {"birth", 1},  {"bison", 1},
        {"black", 3},  {"blade", 1},  {"blame", 2},  {"bland", 3},  {"blank", 3},
        {"blare", 2},  {"blast", 1},  {"blaze", 1},  {"bleak", 3},  {"bleed", 2},
        {"blend", 2},  {"bless", 2},  {"blimp", 1},  {"blind", 3},  {"bliss", 1},
        {"blitz", 1},  {"bloat", 2},  {"block", 1},  {"bloke", 1},  {"blond", 3},
        {"blood", 1},  {"bloom", 2},  {"blown", 2},  {"bluff", 2},  {"blunt", 3},
        {"blurb", 1},  {"blurt", 2},  {"blush", 2},  {"board", 1},  {"boast", 2},
        {"boney", 3},  {"bonus", 1},  {"booby", 1},  {"boost", 2},  {"booze", 1},
        {"borax", 1},  {"bough", 1},  {"boule", 1},  {"bound", 2},  {"boxer", 1},
        {"brace", 2},  {"braid", 1},  {"brain", 1},  {"brake", 1},  {"brand", 1},
        {"brash", 3},  {"brass", 1},  {"brave", 3},  {"bravo", 5},  {"brawl", 1},
        {"bread", 1},  {"break", 2},  {"breed", 2},  {"briar", 1},  {"bribe", 2},
        {"brick", 1},  {"bride", 1},  {"brief", 3},  {"brine", 1},  {"bring", 2},
        {"brink", 1},  {"briny", 3},  {"brisk", 3},  {"broad", 3},  {"broil", 2},
        {"broke", 2},  {"brood", 1},  {"brook", 1},  {"broom", 1},  {"broth", 1},
        {"brown", 3},  {"brunt", 1},  {"brush", 1},  {"brute", 1},  {"buddy", 1},
        {"budge", 2},  {"buggy", 1},  {"build", 2},  {"built", 2},  {"bulge", 2},
        {"bulky", 3},  {"bully", 1},  {"bunch", 1},  {"burly", 3},  {"burnt", 3},
        {"burst", 2},  {"bused", 2},  {"bushy", 3},  {"butch", 1},  {"butte", 1},
        {"buyer", 1},  {"cabal", 1},  {"cabin", 1},  {"cable", 1},  {"cacao", 1},
        {"cache", 1},  {"cadet", 1},  {"camel", 1},  {"cameo", 1},  {"canal", 1},
        {"candy", 1},  {"canny", 3},  {"canoe", 1},  {"canon", 1},  {"caper", 1},
        {"carat", 1},  {"cargo", 1},  {"carol", 1},  {"carry", 2},  {"carve", 2},
        {"catch", 2},  {"cater", 2},  {"caulk", 2},  {"cause", 1},  {"cedar", 1},
        {"chafe", 2},  {"chain", 1},  {"chair", 1},  {"chalk", 1},  {"champ", 1},
        {"chant", 2},  {"chaos", 1},  {"chard", 1},  {"charm", 1},  {"chart", 1},
        {"chase", 2},  {"cheap", 3},  {"cheat", 2},  {"check", 2},  {"cheek", 1},
        {"cheer", 2},  {"chest", 1},  {"chewy", 3},  {"chief", 1},  {"child", 1},
        {"chill", 2},  {"chime", 1},  {"china", 1},  {"choir", 1},  {"choke", 2},
        {"chord", 1},  {"chore", 1},  {"chose", 2},  {"chunk", 1},  {"churn", 2},
        {"chute", 1},  {"cider", 1},  {"cigar", 1},  {"cinch", 1},  {"circa", 5},
        {"civic", 3},  {"civil", 3},  {"claim", 2},  {"clamp", 1},  {"clash", 1},
        {"clasp", 2},  {"class", 1},  {"clean", 3},  {"clear", 3},  {"cleat", 1},
        {"cleft", 1},  {"clerk", 1},  {"click", 2},  {"cliff", 1},  {"climb", 2},
        {"cling", 2},  {"cloak", 1},  {"clock", 1},  {"clone", 1},  {"close", 2},
        {"cloth", 1},  {"cloud", 1},  {"clout", 1},  {"clove", 1},  {"clown", 1},
        {"cluck", 2},  {"clued", 2},  {"clump", 1},  {"coach", 1},  {"coast", 1},
        {"cobra", 1},  {"cocoa", 1},  {"colon", 1},  {"color", 1},  {"comet", 1},
        {"comfy", 3},  {"comma", 1},  {"condo", 1},  {"conic", 3},  {"coral", 1},
        {"corny", 3},  {"couch", 1},  {"cough", 2},  {"could", 2},  {"count", 2},
        {"court", 1},  {"cover", 2},  {"covet", 2},  {"cower", 2},  {"crack", 2},
        {"craft", 1},  {"cramp", 1},  {"crane", 1},  {"crank", 2},  {"crash", 2},
        {"crass", 3},  {"crate", 1},  {"crave", 2},  {"crawl", 2},  {"craze", 1},
        {"crazy", 3},  {"creak", 2},  {"cream", 1},  {"credo", 1},  {"creed", 1},
        {"creek", 1},  {"creep", 2},  {"crept", 2},  {"cress", 1},  {"crest", 1},
        {"crick", 1},  {"crime", 1},  {"crimp", 2},  {"crisp", 3},  {"croak", 2},
        {"crock", 1},  {"crone", 1},  {"crony", 1},  {"crook", 1},  {"cross", 2},
        {"croup", 1},  {"crowd", 1},  {"crown", 1},  {"crude", 3},  {"cruel", 3},
        {"crumb", 1},  {"crush", 2},  {"crust", 1},  {"crypt", 1},  {"cubic", 3},
        {"cumin", 1},  {"curio", 1},  {"curly", 3},  {"curry", 1},  {"curse", 1},
        {"curve", 1},  {"curvy", 3},  {"cynic", 1},  {"daddy", 1},  {"daily", 4},
        {"dairy", 1},  {"daisy", 1},  {"dance", 2},  {"dandy", 3},  {"datum", 1},
        {"daunt", 2},  {"dealt", 2},  {"death", 1},  {"debit", 1},  {"debug", 2},
        {"debut", 1},  {"decal", 1},  {"decay", 2},  {"decor", 1},  {"decoy", 1},
        {"decry", 2},  {"defer", 2},  {"deign", 2},  {"deity", 1},  {"delta", 1},
        {"delve", 2},  {"denim", 1},  {"dense", 3},  {"depot", 1},  {"depth", 1},
        {"derby", 1},  {"deter", 2},  {"detox", 1},  {"deuce", 1},  {"devil", 1},
        {"diary", 1},  {"digit", 1},  {"dimly", 4},  {"diner", 1},  {"dingo", 1},
        {"dirge", 1},  {"dirty", 3},  {"disco", 1},  {"ditch", 1},  {"ditto", 4},
        {"dizzy", 3},  {"dodge", 2},  {"dogma", 1},  {"doing", 2},  {"dolly", 1},
        {"donor", 1},  {"donut", 1},  {"dopey", 3},  {"doubt", 2},  {"dough", 1},
        {"dowdy", 3},  {"dowel", 1},  {"downy", 3},  {"dowry", 1},  {"dozen", 1},
        {"draft", 1},  {"drain", 2},  {"drake", 1},  {"drama", 1},  {"drank", 2},
        {"drape", 2},  {"drawl", 2},  {"drawn", 2},  {"dread", 2},  {"dream", 1},
        {"dress", 1},  {"dried", 2},  {"drier", 3},  {"drift", 2},  {"drill", 2},
        {"drink", 2},  {"drive", 2},  {"droit", 1},  {"droll", 3},  {"drone", 1},
        {"drool", 2},  {"droop", 2},  {"dross", 1},  {"drove", 2},  {"drown", 2},
        {"druid", 1},  {"drunk", 3},  {"dryer", 1},  {"dryly", 4},  {"duchy", 1},
        {"dully", 4},  {"dummy", 1},  {"dumpy", 3},  {"dunce", 1},  {"dusky", 3},
        {"dusty", 3},  {"dutch", 3},  {"duvet", 1},  {"dwarf", 1},  {"dwell", 2},
        {"dwelt", 2},  {"dying", 2},  {"eager", 3},  {"eagle", 1},  {"early", 4},
        {"earth", 1},  {"easel", 1},  {"eaten", 2},  {"eater", 1},  {"ebony", 1},
        {"eclat", 1},  {"edict", 1},  {"edify", 2},  {"eerie", 3},  {"egret", 1},
        {"eight", 5},  {"eject", 2},  {"eking", 2},  {"elate", 2},  {"elbow", 1},
        {"elder", 3},  {"elect", 2},  {"elegy", 1},  {"elfin", 3},  {"elide", 2},
        {"elite", 1},  {"elope", 2},  {"elude", 2},  {"email", 1},  {"embed", 2},
        {"ember", 1},  {"emcee", 1},  {"empty", 3},  {"enact", 2},  {"endow", 2},
        {"enema", 1},  {"enemy", 1},  {"enjoy", 2},  {"ennui", 1},  {"ensue", 2},
        {"enter", 2},  {"entry", 1},  {"envoy", 1},  {"epoch", 1},  {"epoxy", 1},
        {"equal", 3},  {"equip", 2},  {"erase", 2},  {"erect", 2},  {"erode", 2},
        {"error", 1},  {"erupt", 2},  {"essay", 1},  {"ester", 1},  {"ether", 1},
        {"ethic", 1},  {"ethos", 1},  {"etude", 1},  {"evade", 2},  {"event", 1},
        {"every", 5},  {"evict", 2},  {"evoke", 2},  {"exact", 3},  {"exalt", 2},
        {"excel", 2},  {"exert", 2},  {"exile", 1},  {"exist", 2},  {"expel", 2},
        {"extol", 2},  {"extra", 3},  {"exult", 2},  {"fable", 1},  {"facet", 1},
        {"faint", 3},  {"fairy", 1},  {"faith", 1},  {"false", 3},  {"fancy", 3},
        {"farce", 1},  {"fatal", 3},  {"fatty", 3},  {"fault", 1},  {"fauna", 1},
        {"favor", 1},  {"feast", 1},  {"feign", 2},  {"fella", 1},  {"felon", 1},
        {"femur", 1},  {"fence", 1},  {"feral", 3},  {"ferry", 1},  {"fetal", 3},
        {"fetch", 2},  {"fetid", 3},  {"fetus", 1},  {"fever", 1},  {"fewer", 3},
        {"fiber", 1},  {"field", 1},  {"fiend", 1},  {"fiery", 3},  {"fifty", 5},
        {"fight", 2},  {"filly", 1},  {"filmy", 3},  {"final", 3},  {"finch", 1},
        {"finer", 3},  {"first", 3},  {"fishy", 3},  {"fjord", 1},  {"flack", 1},
        {"flail", 2},  {"flair", 1},  {"flake", 1},  {"flaky", 3},  {"flame", 1},
        {"flank", 1},  {"flare", 2},  {"flash", 2},  {"flask", 1},  {"fleck", 1},
        {"fleet", 1},  {"flesh", 1},  {"flick", 2},  {"flier", 1},  {"fling", 2},
        {"flint", 1},  {"flirt", 2},  {"float", 2},  {"flock", 1},  {"flood", 1},
        {"floor", 1},  {"flora", 1},  {"floss", 1},  {"flour", 1},  {"flout", 2},
        {"flown", 2},  {"fluff", 1},  {"fluid", 1},  {"fluke", 1},  {"flume", 1},
        {"flung", 2},  {"flunk", 2},  {"flush", 2},  {"flute", 1},  {"flyer", 1},
        {"foamy", 3},  {"focal", 3},  {"focus", 1},  {"foggy", 3},  {"foist", 2},
        {"folio", 1},  {"folly", 1},  {"foray", 1},  {"force", 1},  {"forge", 2},
        {"forgo", 2},  {"forte", 1},  {"forth", 4},  {"forty", 5},  {"forum", 1},
        {"found", 2},  {"foyer", 1},  {"frail", 3},  {"frame", 1},  {"frank", 3},
        {"fraud", 1},  {"freak", 1},  {"freed", 2},  {"fresh", 3},  {"friar", 1},
        {"fried", 2},  {"frill", 1},  {"frisk", 2},  {"frock", 1},  {"frond", 1},
        {"front", 1},  {"frost", 1},  {"froth", 1},  {"frown", 2},  {"froze", 2},
        {"fruit", 1},  {"fudge", 1},  {"fugue", 1},  {"fully", 4},  {"fungi", 1},
        {"funky", 3},  {"funny", 3},  {"furor", 1},  {"furry", 3},  {"fussy", 3},
        {"fuzzy", 3},  {"gaffe", 1},  {"gaily", 4},  {"gamma", 1},  {"gamut", 1},
        {"gassy", 3},  {"gauge", 1},  {"gaunt", 3},  {"gauze", 1},  {"gavel", 1},
        {"gawky", 3},  {"gayer", 3},  {"gecko", 1},  {"geeky", 3},  {"geese", 1},
        {"genie", 1},  {"genre", 1},  {"ghost", 1},  {"ghoul", 1},  {"giant", 1},
        {"giddy", 3},  {"gipsy", 1},  {"girly", 3},  {"girth", 1},  {"given", 2},
        {"giver", 1},  {"glade", 1},  {"gland", 1},  {"glare", 2},  {"glass", 1},
        {"glaze", 1},  {"gleam", 2},  {"glean", 2},  {"glide", 2},  {"glint", 1},
        {"gloat", 2},  {"globe", 1},  {"gloom", 1},  {"glory", 1},  {"gloss", 1},
        {"glove", 1},  {"glyph", 1},  {"gnash", 2},  {"gnome", 1},  {"godly", 3},
        {"going", 2},  {"golem", 1},  {"golly", 5},  {"gonad", 1},  {"goner", 1},
        {"goody", 1},  {"gooey", 3},  {"goofy", 3},  {"goose", 1},  {"gorge", 1},
        {"gouge", 2},  {"gourd", 1},  {"grace", 1},  {"grade", 1},  {"graft", 1},
        {"grail", 1},  {"grain", 1},  {"grand", 3},  {"grant", 2},  {"grape", 1},
        {"graph", 1},  {"grasp", 2},  {"grass", 1},  {"grate", 2},  {"grave", 1},
        {"gravy", 1},  {"graze", 2},  {"great", 3},  {"greed", 1},  {"green", 3},
        {"greet", 2},  {"grief", 1},  {"grill", 1},  {"grime", 1},  {"grimy", 3},
        {"grind", 2},  {"gripe", 2},  {"groan", 2},  {"groin", 1},  {"groom", 1},
        {"grope", 2},  {"gross", 3},  {"group", 1},  {"grout", 1},  {"grove", 1},
        {"growl", 2},  {"grown", 2},  {"gruel", 1},  {"gruff", 3},  {"grunt", 2},
        {"guard", 1},  {"guava", 1},  {"guess", 2},  {"guest", 1},  {"guide", 2},
        {"guild", 1},  {"guile", 1},  {"guilt", 1},  {"guise", 1},  {"gulch", 1},
        {"gully", 1},  {"gumbo", 1},  {"gummy", 3},  {"guppy", 1},  {"gusto", 1},
        {"gusty", 3},  {"gypsy", 1},  {"habit", 1},  {"hairy", 3},  {"halve", 2},
        {"handy", 3},  {"happy", 3},  {"hardy", 3},  {"harem", 1},  {"harpy", 1},
        {"harry", 2},  {"harsh", 3},  {"haste", 1},  {"hasty", 3},  {"hatch", 2},
        {"hater", 1},  {"haunt", 2},  {"haute", 3},  {"haven", 1},  {"havoc", 1},
        {"hazel", 1},  {"heady", 3},  {"heard", 2},  {"heart", 1},  {"heath", 1},
        {"heave", 2},  {"heavy", 3},  {"hedge", 1},  {"hefty", 3},  {"heist", 1},
        {"helix", 1},  {"hello", 5},  {"hence", 4},  {"heron", 1},  {"hilly", 3},
        {"hinge", 1},  {"hippo", 1},  {"hippy", 3},  {"hitch", 1},  {"hoard", 2},
        {"hobby", 1},  {"hoist", 2},  {"holly", 1},  {"homer", 1},  {"honey", 1},
        {"honor", 1},  {"horde", 1},  {"horny", 3},  {"horse", 1},  {"hotel", 1},
        {"hotly", 4},  {"hound", 1},  {"house", 1},  {"hovel", 1},  {"hover", 2},
        {"howdy", 5},  {"human", 1},  {"humid", 3},  {"humor", 1},  {"humph", 5},
        {"humus", 1},  {"hunch", 1},  {"hunky", 3},  {"hurry", 2},  {"husky", 3},
        {"hussy", 1},  {"hutch", 1},  {"hydro", 1},  {"hyena", 1},  {"hymen", 1},
        {"hyper", 3},  {"icily", 4},  {"icing", 1},  {"ideal", 3},  {"idiom", 1},
        {"idiot", 1},  {"idler", 1},  {"idyll", 1},  {"igloo", 1},  {"iliac", 3},
        {"image", 1},  {"imbue", 2},  {"impel", 2},  {"imply", 2},  {"inane", 3},
        {"inbox", 1},  {"incur", 2},  {"index", 1},  {"inept", 3},  {"inert", 3},
        {"infer", 2},  {"ingot", 1},  {"inlay", 1},  {"inlet", 1},  {"inner", 3},
        {"input", 1},  {"inter", 2},  {"intro", 1},  {"ionic", 3},  {"irate", 3},
        {"irony", 1},  {"islet", 1},  {"issue", 1},  {"itchy", 3},  {"ivory", 1},
        {"jaunt", 1},  {"jazzy", 3},  {"jelly", 1},  {"jerky", 1},  {"jetty", 1},
        {"jewel", 1},  {"jiffy", 1},  {"joint", 1},  {"joist", 1},  {"joker", 1},
        {"jolly", 3},  {"joust", 2},  {"judge", 1},  {"juice", 1},  {"juicy", 3},
        {"jumbo", 3},  {"jumpy", 3},  {"junta", 1},  {"junto", 1},  {"juror", 1},
        {"kappa", 1},  {"karma", 1},  {"kayak", 1},  {"kebab", 1},  {"khaki", 1},
        {"kinky", 3},  {"kiosk", 1},  {"kitty", 1},  {"knack", 1},  {"knave", 1},
        {"knead", 2},  {"kneed", 2},  {"kneel", 2},  {"knelt", 2},  {"knife", 1},
        {"knock", 2},  {"knoll", 1},  {"known", 2},  {"koala", 1},  {"krill", 1},
        {"label", 1},  {"labor", 1},  {"laden", 3},  {"ladle", 1},  {"lager", 1},
        {"lance", 1},  {"lanky", 3},  {"lapel", 1},  {"lapse", 1},  {"large", 3},
        {"larva", 1},  {"lasso", 1},  {"latch", 1},  {"later", 4},  {"lathe", 1},
        {"latte", 1},  {"laugh", 2},  {"layer", 1},  {"leach", 2},  {"leafy", 3},
        {"leaky", 3},  {"leant", 2},  {"leapt", 2},  {"learn", 2},  {"lease", 2},
        {"leash", 1},  {"least", 5},  {"leave", 2},  {"ledge", 1},  {"leech", 1},
        {"leery", 3},  {"lefty", 1},  {"legal", 3},  {"leggy", 3},  {"lemon", 1},
        {"lemur", 1},  {"level", 1},  {"lever", 1},  {"libel", 1},  {"liege", 1},
        {"light", 1},  {"liken", 2},  {"lilac", 1},  {"limbo", 1},  {"limit", 1},
        {"linen", 1},  {"liner", 1},  {"lingo", 1},  {"lipid", 1},  {"lithe", 3},
        {"liver", 1},  {"livid", 3},  {"llama", 1},  {"loamy", 3},  {"loath", 3},
        {"lobby", 1},  {"local", 3},  {"locus", 1},  {"lodge", 1},  {"lofty", 3},
        {"logic", 1},  {"login", 1},  {"loopy", 3},  {"loose", 3},  {"lorry", 1},
        {"loser", 1},  {"louse", 1},  {"lousy", 3},  {"lover", 1},  {"lower", 2},
        {"lowly", 3},  {"loyal", 3},  {"lucid", 3},  {"lucky", 3},  {"lumen", 1},
        {"lumpy", 3},  {"lunar", 3},  {"lunch", 1},  {"lunge", 2},  {"lupus", 1},
        {"lurch", 2},  {"lurid", 3},  {"lusty", 3},  {"lying", 2},  {"lymph", 1},
        {"lynch", 2},  {"lyric", 1},  {"macaw", 1},  {"macho", 3},  {"macro", 1},
        {"madam", 1},  {"madly", 4},  {"mafia", 1},  {"magic", 1},  {"magma", 1},
        {"maize", 1},  {"major", 3},  {"mambo", 1},  {"mamma", 1},  {"mammy", 1},
        {"manga", 1},  {"mange", 1},  {"mango", 1},  {"mangy", 3},  {"mania", 1},
        {"manic", 3},  {"manly", 3},  {"manor", 1},  {"maple", 1},  {"march", 2},
        {"marry", 2},  {"marsh", 1},  {"mason", 1},  {"masse", 1},  {"match", 1},
        {"matey", 1},  {"mauve", 3},  {"maxim", 1},  {"maybe", 4},  {"mayor", 1},
        {"mealy", 3},  {"meant", 2},  {"meaty", 3},  {"mecca", 1},  {"medal", 1},
        {"media", 1},  {"medic", 1},  {"melee", 1},  {"melon", 1},  {"mercy", 1},
        {"merge", 2},  {"merit", 1},  {"merry", 3},  {"metal", 1},  {"meter", 1},
        {"metro", 1},  {"micro", 3},  {"midge", 1},  {"midst", 1},  {"might", 2},
        {"milky", 3},  {"mimic", 2},  {"mince", 2},  {"miner", 1},  {"minim", 1},
        {"minor", 3},  {"minty", 3},  {"minus", 5},  {"mirth", 1},  {"miser", 1},
        {"missy", 1},  {"mocha", 1},  {"modal", 3},  {"model", 1},  {"modem", 1},
        {"mogul", 1},  {"moist", 3},  {"molar", 1},  {"moldy", 3},  {"money", 1},
        {"month", 1},  {"moody", 3},  {"moose", 1},  {"moral", 3},  {"moron", 1},
        {"morph", 2},  {"mossy", 3},  {"motel", 1},  {"motif", 1},  {"motor", 1},
        {"motto", 1},  {"moult", 2},  {"mound", 1},  {"mount", 2},  {"mourn", 2},
        {"mouse", 1},  {"mouth", 1},  {"mover", 1},  {"movie", 1},  {"mower", 1},
        {"mucky", 3},  {"mucus", 1},  {"muddy", 3},  {"mulch", 1},  {"mummy", 1},
        {"munch", 2},  {"mural", 1},  {"murky", 3},  {"mushy", 3},  {"music", 1},
        {"musky", 3},  {"musty", 3},  {"myrrh", 1},  {"nadir", 1},  {"naive", 3},
        {"nanny", 1},  {"nasal", 3},  {"nasty", 3},  {"natal", 3},  {"naval", 3},
        {"navel", 1},  {"needy", 3},  {"neigh", 2},  {"nerdy", 3},  {"nerve", 1},
        {"never", 4},  {"newer", 3},  {"newly", 4},  {"nicer", 3},  {"niche", 1},
        {"niece", 1},  {"night", 1},  {"ninja", 1},  {"ninny", 1},  {"ninth", 5},
        {"noble", 3},  {"nobly", 4},  {"noise", 1},  {"noisy", 3},  {"nomad", 1},
        {"noose", 1},  {"north", 1},  {"nosey", 3},  {"notch", 1},  {"novel", 1},
        {"nudge", 2},  {"nurse", 1},  {"nutty", 3},  {"nylon", 1},  {"nymph", 1},
        {"oaken", 3},  {"obese", 3},  {"occur", 2},  {"ocean", 1},  {"octal", 3},
        {"octet", 1},  {"odder", 3},  {"oddly", 4},  {"offal", 1},  {"offer", 2},
        {"often", 4},  {"olden", 3},  {"older", 3},  {"olive", 1},  {"ombre", 1},
        {"omega", 1},  {"onion", 1},  {"onset", 1},  {"opera", 1},  {"opine", 2},
        {"opium", 1},  {"optic", 3},  {"orbit", 1},  {"order", 1},  {"organ", 1},
        {"other", 5},  {"otter", 1},  {"ought", 2},  {"ounce", 1},  {"outdo", 2},
        {"outer", 3},  {"outgo", 2},  {"ovary", 1},  {"ovate", 3},  {"overt", 3},
        {"ovine", 3},  {"ovoid", 3},  {"owing", 2},  {"owner", 1},  {"oxide", 1},
        {"ozone", 1},  {"paddy", 1},  {"pagan", 1},  {"paint", 2},  {"paler", 3},
        {"palsy", 1},  {"panel", 1},  {"panic", 1},  {"pansy", 1},  {"papal", 3},
        {"paper", 1},  {"parer", 1},  {"parka", 1},  {"parry", 2},  {"parse", 2},
        {"party", 1},  {"pasta", 1},  {"paste", 1},  {"pasty", 3},  {"patch", 1},
        {"patio", 1},  {"patsy", 1},  {"patty", 1},  {"pause", 1},  {"payee", 1},
        {"payer", 1},  {"peace", 1},  {"peach", 1},  {"pearl", 1},  {"pecan", 1},
        {"pedal", 1},  {"penal", 3},  {"pence", 1},  {"penne", 1},  {"penny", 1},
        {"perch", 2},  {"peril", 1},  {"perky", 3},  {"pesky", 3},  {"pesto", 1},
        {"petal", 1},  {"petty", 3},  {"phase", 1},  {"phone", 1},  {"phony", 3},
        {"photo", 1},  {"piano", 1},  {"picky", 3},  {"piece", 1},  {"piety", 1},
        {"piggy", 1},  {"pilot", 1},  {"pinch", 2},  {"piney", 3},  {"pinky", 1},
        {"pinto", 1},  {"piper", 1},  {"pique", 2},  {"pitch", 1},  {"pithy", 3},
        {"pivot", 2},  {"pixel", 1},  {"pixie", 1},  {"pizza", 1},  {"place", 1},
        {"plaid", 1},  {"plain", 3},  {"plait", 1},  {"plane", 1},  {"plank", 1},
        {"plant", 1},  {"plate", 1},  {"plaza", 1},  {"plead", 2},  {"pleat", 1},
        {"plied", 2},  {"plier", 1},  {"pluck", 2},  {"plumb", 1},  {"plume", 1},
        {"plump", 3},  {"plunk", 2},  {"plush", 3},  {"poesy", 1},  {"point", 1},
        {"poise", 1},  {"poker", 1},  {"polar", 3},  {"polka", 1},  {"polyp", 1},
        {"pooch", 1},  {"poppy", 1},  {"porch", 1},  {"poser", 1},  {"posit", 2},
        {"posse", 1},  {"pouch", 1},  {"pound", 1},  {"pouty", 3},  {"power", 1},
        {"prank", 1},  {"prawn", 1},  {"preen", 2},  {"press", 2},  {"price", 1},
        {"prick", 2},  {"pride", 1},  {"pried", 2},  {"prime", 3},  {"primo", 3},
        {"print", 2},  {"prior", 3},  {"prism", 1},  {"privy", 3},  {"prize", 1},
        {"probe", 2},  {"prone", 3},  {"prong", 1},  {"proof", 1},  {"prose", 1},
        {"proud", 3},  {"prove", 2},  {"prowl", 2},  {"proxy", 1},  {"prude", 1},
        {"prune", 2},  {"psalm", 1},  {"pubic", 3},  {"pudgy", 3},  {"puffy", 3},
        {"pulpy", 3},  {"pulse", 1},  {"punch", 2},  {"pupil", 1},  {"puppy", 1},
        {"puree", 1},  {"purer", 3},  {"purge", 2},  {"purse", 1},  {"pushy", 3},
        {"putty", 1},  {"pygmy", 1},  {"quack", 2},  {"quail", 1},  {"quake", 2},
        {"qualm", 1},  {"quark", 1},  {"quart", 1},  {"quash", 2},  {"quasi", 3},
        {"queen", 1},  {"queer", 3},  {"quell", 2},  {"query", 1},  {"quest", 1},
        {"queue", 1},  {"quick", 3},  {"quiet", 3},  {"quill", 1},  {"quilt", 1},
        {"quirk", 1},  {"quite", 4},  {"quota", 1},  {"quote", 2},  {"quoth", 2},
        {"rabbi", 1},  {"rabid", 3},  {"racer", 1},  {"radar", 1},  {"radii", 1},
        {"radio", 1},  {"rainy", 3},  {"raise", 2},  {"rajah", 1},  {"rally", 2},
        {"ralph", 2},  {"ramen", 1},  {"ranch", 1},  {"randy", 3},  {"range", 1},
        {"rapid", 3},  {"rarer", 3},  {"raspy", 3},  {"ratio", 1},  {"ratty", 3},
        {"raven", 1},  {"rayon", 1},  {"razor", 1},  {"reach", 2},  {"react", 2},
        {"ready", 3},  {"realm", 1},  {"rearm", 2},  {"rebar", 1},  {"rebel", 1},
        {"rebus", 1},  {"rebut", 2},  {"recap", 2},  {"recur", 2},  {"recut", 2},
        {"reedy", 3},  {"refer", 2},  {"refit", 2},  {"regal", 3},  {"rehab", 1},
        {"reign", 2},  {"relax", 2},  {"relay", 2},  {"relic", 1},  {"remit", 2},
        {"renal", 3},  {"renew", 2},  {"repay", 2},  {"repel", 2},  {"reply", 2},
        {"rerun", 2},  {"reset", 2},  {"resin", 1},  {"retch", 2},  {"retro", 3},
        {"retry", 2},  {"reuse", 2},  {"revel", 2},  {"revue", 1},  {"rhino", 1},
        {"rhyme", 1},  {"rider", 1},  {"ridge", 1},  {"rifle", 1},  {"right", 3},
        {"rigid", 3},  {"rigor", 1},  {"rinse", 2},  {"ripen", 2},  {"riper", 3},
        {"risen", 2},  {"riser", 1},  {"risky", 3},  {"rival", 1},  {"river", 1},
        {"rivet", 1},  {"roach", 1},  {"roast", 2},  {"robin", 1},  {"robot", 1},
        {"rocky", 3},  {"rodeo", 1},  {"roger", 5},  {"rogue", 1},  {"roomy", 3},
        {"roost", 1},  {"rotor", 1},  {"rouge", 1},  {"rough", 3},  {"round", 3},
        {"rouse", 2},  {"route", 1},  {"rover", 1},  {"rowdy", 3},  {"rower", 1},
        {"royal", 3},  {"ruddy", 3},  {"ruder", 3},  {"rugby", 1},  {"ruler", 1},
        {"rumba", 1},  {"rumor", 1},  {"rupee", 1},  {"rural", 3},  {"rusty", 3},
        {"sadly", 4},  {"safer", 3},  {"saint", 1},  {"salad", 1},  {"sally", 2},
        {"salon", 1},  {"salsa", 1},  {"salty", 3},  {"salve", 1},  {"salvo", 1},
        {"sandy", 3},  {"saner", 3},  {"sappy", 3},  {"sassy", 3},  {"satin", 1},
        {"satyr", 1},  {"sauce", 1},  {"saucy", 3},  {"sauna", 1},  {"saute", 2},
        {"savor", 2},  {"savoy", 1},  {"savvy", 3},  {"scald", 2},  {"scale", 1},
        {"scalp", 1},  {"scaly", 3},  {"scamp", 1},  {"scant", 3},  {"scare", 2},
        {"scarf", 1},  {"scary", 3},  {"scene", 1},  {"scent", 1},  {"scion", 1},
        {"scoff", 2},  {"scold", 2},  {"scone", 1},  {"scoop", 2},  {"scope", 1},
        {"score", 1},  {"scorn", 2},  {"scour", 2},  {"scout", 1},  {"scowl", 2},
        {"scram", 2},  {"scrap", 1},  {"scree", 1},  {"screw", 1},  {"scrub", 2},
        {"scrum", 1},  {"scuba", 1},  {"sedan", 1},  {"seedy", 3},  {"segue", 2},
        {"seize", 2},  {"semen", 1},  {"sense", 1},  {"sepia", 1},  {"serif", 1},
        {"serum", 1},  {"serve", 2},  {"setup", 1},  {"seven", 5},  {"sever", 2},
        {"sewer", 1},  {"shack", 1},  {"shade", 1},  {"shady", 3},  {"shaft", 1},
        {"shake", 2},  {"shaky", 3},  {"shale", 1},  {"shall", 2},  {"shalt", 2},
        {"shame", 1},  {"shank", 1},  {"shape", 1},  {"shard", 1},  {"share", 2},
        {"shark", 1},  {"sharp", 3},  {"shave", 2},  {"shawl", 1},  {"shear", 2},
        {"sheen", 1},  {"sheep", 1},  {"sheer", 3},  {"sheet", 1},  {"sheik", 1},
        {"shelf", 1},  {"shell", 1},  {"shied", 2},  {"shift", 2},  {"shine", 2},
        {"shiny", 3},  {"shire", 1},  {"shirk", 2},  {"shirt", 1},  {"shoal", 1},
        {"shock", 1},  {"shone", 2},  {"shook", 2},  {"shoot", 2},  {"shore", 1},
        {"shorn", 2},  {"short", 3},  {"shout", 2},  {"shove", 2},  {"shown", 2},
        {"showy", 3},  {"shrew", 1},  {"shrub", 1},  {"shrug", 2},  {"shuck", 2},
        {"shunt", 2},  {"shush", 2},  {"shyly", 4},  {"siege", 1},  {"sieve", 1},
        {"sight", 1},  {"sigma", 1},  {"silky", 3},  {"silly", 3},  {"since", 5},
        {"sinew", 1},  {"singe", 2},  {"siren", 1},  {"sissy", 1},  {"sixth", 5},
        {"sixty", 5},  {"skate", 2},  {"skier", 1},  {"skiff", 1},  {"skill", 1},
        {"skimp", 2},  {"skirt", 1},  {"skulk", 2},  {"skull", 1},  {"skunk", 1},
        {"slack", 3},  {"slain", 2},  {"slang", 1},  {"slant", 1},  {"slash", 2},
        {"slate", 1},  {"sleek", 3},  {"sleep", 2},  {"sleet", 1},  {"slept", 2},
        {"slice", 1},  {"slick", 3},  {"slide", 2},  {"slime", 1},  {"slimy", 3},
        {"sling", 1},  {"slink", 2},  {"sloop", 1},  {"slope", 1},  {"slosh", 2},
        {"sloth", 1},  {"slump", 1},  {"slung", 2},  {"slunk", 2},  {"slurp", 2},
        {"slush", 1},  {"slyly", 4},  {"smack", 2},  {"small", 3},  {"smart", 3},
        {"smash", 2},  {"smear", 2},  {"smell", 2},  {"smelt", 2},  {"smile", 2},
        {"smirk", 2},  {"smite", 2},  {"smith", 1},  {"smock", 1},  {"smoke", 1},
        {"smoky", 3},  {"smote", 2},  {"snack", 1},  {"snail", 1},  {"snake", 1},
        {"snaky", 3},  {"snare", 1},  {"snarl", 2},  {"sneak", 2},  {"sneer", 2},
        {"snide", 3},  {"sniff", 2},  {"snipe", 2},  {"snoop", 2},  {"snore", 2},
        {"snort", 2},  {"snout", 1},  {"snowy", 3},  {"snuck", 2},  {"snuff", 2},
        {"soapy", 3},  {"sober", 3},  {"soggy", 3},  {"solar", 3},  {"solid", 3},
        {"solve", 2},  {"sonar", 1},  {"sonic", 3},  {"sooth", 1},  {"sooty", 3},
        {"sorry", 3},  {"sound", 1},  {"south", 1},  {"sower", 1},  {"space", 1},
        {"spade", 1},  {"spank", 2},  {"spare", 3},  {"spark", 1},  {"spasm", 1},
        {"spawn", 2},  {"speak", 2},  {"spear", 1},  {"speck", 1},  {"speed", 1},
        {"spell", 2},  {"spelt", 1},  {"spend", 2},  {"spent", 2},  {"sperm", 1},
        {"spice", 1},  {"spicy", 3},  {"spied", 2},  {"spiel", 1},  {"spike", 1},
        {"spiky", 3},  {"spill", 2},  {"spilt", 2},  {"spine", 1},  {"spiny", 3},
        {"spire", 1},  {"spite", 1},  {"splat", 2},  {"split", 2},  {"spoil", 2},
        {"spoke", 2},  {"spoof", 1},  {"spook", 2},  {"spool", 1},  {"spoon", 1},
        {"spore", 1},  {"sport", 1},  {"spout", 1},  {"spray", 2},  {"spree", 1},
        {"sprig", 1},  {"spunk", 1},  {"spurn", 2},  {"spurt", 2},  {"squad", 1},
        {"squat", 2},  {"squib", 1},  {"stack", 1},  {"staff", 1},  {"stage", 1},
        {"staid", 3},  {"stain", 1},  {"stair", 1},  {"stake", 1},  {"stale", 3},
        {"stalk", 2},  {"stall", 1},  {"stamp", 1},  {"stand", 2},  {"stank", 2},
        {"stare", 2},  {"stark", 3},  {"start", 2},  {"stash", 2},  {"state", 1},
        {"stave", 1},  {"stead", 1},  {"steak", 1},  {"steal", 2},  {"steam", 1},
        {"steed", 1},  {"steel", 1},  {"steep", 3},  {"steer", 2},  {"stein", 1},
        {"stern", 3},  {"stick", 1},  {"stiff", 3},  {"still", 4},  {"stilt", 1},
        {"sting", 2},  {"stink", 2},  {"stint", 1},  {"stock", 1},  {"stoic", 3},
        {"stoke", 2},  {"stole", 2},  {"stomp", 2},  {"stone", 1},  {"stony", 3},
        {"stood", 2},  {"stool", 1},  {"stoop", 2},  {"store", 1},  {"stork", 1},
        {"storm", 1},  {"story", 1},  {"stout", 3},  {"stove", 1},  {"strap", 1},
        {"straw", 1},  {"stray", 2},  {"strip", 1},  {"strut", 2},  {"stuck", 2},
        {"study", 2},  {"stuff", 1},  {"stump", 1},  {"stung", 2},  {"stunk", 2},
        {"stunt", 1},  {"style", 1},  {"suave", 3},  {"sugar", 1},  {"suing", 2},
        {"suite", 1},  {"sulky", 3},  {"sully", 2},  {"sumac", 1},  {"sunny", 3},
        {"super", 3},  {"surer", 3},  {"surge", 2},  {"surly", 3},  {"sushi", 1},
        {"swami", 1},  {"swamp", 1},  {"swarm", 1},  {"swash", 1},  {"swath", 1},
        {"swear", 2},  {"sweat", 2},  {"sweep", 2},  {"sweet", 3},  {"swell", 2},
        {"swept", 2},  {"swift", 3},  {"swill", 1},  {"swine", 1},  {"swing", 2},
        {"swirl", 2},  {"swish", 2},  {"swoon", 2},  {"swoop", 2},  {"sword", 1},
        {"swore", 2},  {"sworn", 2},  {"swung", 2},  {"synod", 1},  {"syrup", 1},
        {"tabby", 1},  {"table", 1},  {"taboo", 1},  {"tacit", 3},  {"tacky", 3},
        {"taffy", 1},  {"taint", 2},  {"taken", 2},  {"taker", 1},  {"tally", 2},
        {"talon", 1},  {"tamer", 1},  {"tango", 1},  {"tangy", 3},  {"taper", 2},
        {"tapir", 1},  {"tardy", 3},  {"tarot", 1},  {"taste", 1},  {"tasty", 3},
        {"tatty", 3},  {"taunt", 2},  {"tawny", 3},  {"teach", 2},  {"teary", 3},
        {"tease", 2},  {"teddy", 1},  {"teeth", 1},  {"tempo", 1},  {"tenet", 1},
        {"tenor", 1},  {"tense", 3},  {"tenth", 5},  {"tepee", 1},  {"tepid", 3},
        {"terra", 1},  {"terse", 3},  {"testy", 3},  {"thank", 2},  {"theft", 1},
        {"their", 5},  {"theme", 1},  {"there", 4},  {"these", 5},  {"theta", 1},
        {"thick", 3},  {"thief", 1},  {"thigh", 1},  {"thing", 1},  {"think", 2},
        {"third", 5},  {"thong", 1},  {"thorn", 1},  {"those", 5},  {"three", 5},
        {"threw", 2},  {"throb", 2},  {"throw", 2},  {"thrum", 2},  {"thumb", 1},
        {"thump", 2},  {"thyme", 1},  {"tiara", 1},  {"tibia", 1},  {"tidal", 3},
        {"tiger", 1},  {"tight", 3},  {"tilde", 1},  {"timer", 1},  {"timid", 3},
        {"tipsy", 3},  {"titan", 1},  {"tithe", 1},  {"title", 1},  {"toast", 1},
        {"today", 4},  {"toddy", 1},  {"token", 1},  {"tonal", 3},  {"tonga", 1},
        {"tonic", 1},  {"tooth", 1},  {"topaz", 1},  {"topic", 1},  {"torch", 1},
        {"torso", 1},  {"torus", 1},  {"total", 3},  {"totem", 1},  {"touch", 2},
        {"tough", 3},  {"towel", 1},  {"tower", 1},  {"toxic", 3},  {"toxin", 1},
        {"trace", 2},  {"track", 1},  {"tract", 1},  {"trade", 1},  {"trail", 1},
        {"train", 1},  {"trait", 1},  {"tramp", 1},  {"trash", 1},  {"trawl", 2},
        {"tread", 2},  {"treat", 2},  {"trend", 1},  {"triad", 1},  {"trial", 1},
        {"tribe", 1},  {"trice", 1},  {"trick", 1},  {"tried", 2},  {"tripe", 1},
        {"trite", 3},  {"troll", 1},  {"troop", 1},  {"trope", 1},  {"trout", 1},
        {"trove", 1},  {"truce", 1},  {"truck", 1},  {"truer", 3},  {"truly", 4},
        {"trump", 1},  {"trunk", 1},  {"truss", 1},  {"trust", 2},  {"truth", 1},
        {"tryst", 1},  {"tubal", 3},  {"tuber", 1},  {"tulip", 1},  {"tulle", 1},
        {"tummy", 1},  {"tunic", 1},  {"turbo", 1},  {"tutor", 1},  {"twang", 1},
        {"tweak", 2},  {"tweed", 1},  {"tweet", 2},  {"twice", 4},  {"twine", 1},
        {"twirl", 2},  {"twist", 2},  {"twixt", 5},  {"tying", 2},  {"udder", 1},
        {"ulcer", 1},  {"ultra", 3},  {"umbra", 1},  {"uncle", 1},  {"uncut", 3},
        {"under", 5},  {"undid", 2},  {"undue", 3},  {"unfed", 3},  {"unfit", 3},
        {"unify", 2},  {"union", 1},  {"unite", 2},  {"unity", 1},  {"unlit", 3},
        {"unmet", 3},  {"unset", 3},  {"untie", 2},  {"until", 5},  {"unwed", 3},
        {"unzip", 2},  {"upper", 3},  {"upset", 2},  {"urban", 3},  {"urine", 1},
        {"usage", 1},  {"usher", 1},  {"using", 2},  {"usual", 3},  {"usurp", 2},
        {"utile", 3},  {"utter", 2},  {"vague", 3},  {"valet", 1},  {"valid", 3},
        {"valor", 1},  {"value", 1},  {"valve", 1},  {"vapid", 3},  {"vapor", 1},
        {"vault", 1},  {"vaunt", 2},  {"vegan", 1},  {"venom", 1},  {"venue", 1},
        {"verge", 1},  {"verse", 1},  {"verso", 1},  {"verve", 1},  {"vicar", 1},
        {"video", 1},  {"vigil", 1},  {"vigor", 1},  {"villa", 1},  {"vinyl", 1},
        {"viola", 1},  {"viper", 1},  {"viral", 3},  {"virus", 1},  {"visit", 2},
        {"visor", 1},  {"vista", 1},  {"vital", 3},  {"vivid", 3},  {"vixen", 1},
        {"vocal", 3},  {"vodka", 1},  {"vogue", 1},  {"voice", 1},  {"voila", 5},
        {"vomit", 2},  {"voter", 1},  {"vouch", 2},  {"vowel", 1},  {"vying", 2},
        {"wacky", 3},  {"wafer", 1},  {"wager", 1},  {"wagon", 1},  {"waist", 1},
        {"waive", 2},  {"waltz", 1},  {"warty", 3},  {"waste", 1},  {"watch", 2},
        {"water", 1},  {"waver", 2},  {"waxen", 3},  {"weary", 3},  {"weave", 2},
        {"wedge", 1},  {"weedy", 3},  {"weigh", 2},  {"weird", 3},  {"welch", 2},
        {"welsh", 3},  {"wench", 1},  {"whack", 2},  {"whale", 1},  {"wharf", 1},
        {"wheat", 1},  {"wheel", 1},  {"whelp", 1},  {"where", 4},  {"which", 5},
        {"whiff", 1},  {"while", 5},  {"whine", 2},  {"whiny", 3},  {"whirl", 2},
        {"whisk", 2},  {"white", 3},  {"whole", 3},  {"whoop", 2},  {"whose", 5},
        {"widen", 2},  {"wider", 3},  {"widow", 1},  {"width", 1},  {"wield", 2},
        {"wight", 1},  {"whelk", 1},  {"wimpy", 3},  {"wince", 2},  {"winch", 1},
        {"windy", 3},  {"wiser", 3},  {"wispy", 3},  {"witch", 1},  {"witty", 3},
        {"woken", 2},  {"woman", 1},  {"women", 1},  {"woody", 3},  {"wooer", 1},
        {"wooly", 3},  {"woozy", 3},  {"wordy", 3},  {"world", 1},  {"worry", 2},
        {"worse", 3},  {"worst", 3},  {"worth", 1},  {"would", 2},  {"wound", 1},
        {"woven", 2},  {"wrack", 1},  {"wrath", 1},  {"wreak", 2},  {"wreck", 1},
        {"wrest", 2},  {"wring", 2},  {"wrist", 1},  {"write", 2},  {"wrong", 3},
        {"wrote", 2},  {"wrung", 2},  {"wryly", 4},  {"yacht", 1},  {"yearn", 2},
        {"yeast", 1},  {"yield", 2},  {"young", 3},  {"youth", 1},  {"zebra", 1},
        {"zesty", 3},  {"zonal", 3},
    };
    if (count) *count = sizeof(table) / sizeof(table[0]);
    return table;
}

} // namespace wordlecast::words
