#pragma once

// Desk embedding trained on 3000 synthetic pairs (seed 1).
// Generated file; regenerate instead of editing.

#include "oalstm/embedding.hpp"

namespace oalstm {

inline Embedding builtin_embedding() {
    NamedTensors t;
    t.emplace_back("embedding.input_channels", Tensor({1}, {
        0x1p+0}));
    t.emplace_back("embedding.layer0.config", Tensor({2}, {
        0x1p+1, 0x1p+0}));
    t.emplace_back("embedding.layer0.kernels", Tensor({16, 1, 3, 3}, {
        -0x1.4365eec6b2dfep-2, -0x1.51ee05b6a3bbbp-3, 0x1.4986428602b27p-3, -0x1.cf19c855b4517p-3, -0x1.fb9582f54dd53p-2, -0x1.545fa91a97b61p-3,
        0x1.9f0c293a6a64p-1, 0x1.6fa0846008288p-2, -0x1.23e7c7d7238b8p-4, -0x1.86812bd3e7312p-3, -0x1.645ee6a427547p-4, 0x1.159e35e40438bp-1,
        -0x1.01eb25742bffp-1, -0x1.e054310869ba8p-7, 0x1.4fb270b7c9c04p-1, -0x1.3b7ab1eb1cff6p-4, -0x1.32e7465b459cdp-1, 0x1.1b216f12cb669p-3,
        0x1.0f3396f61b109p-1, -0x1.58dfeb433433bp-2, -0x1.a76b29862808fp-1, -0x1.fa4756178d02cp-4, -0x1.1ed7d54635fccp-2, -0x1.954cf28ca7427p-4,
        0x1.19b889598c5b4p-1, 0x1.65716b11ee08cp-1, -0x1.54110585697ccp-3, 0x1.485f9d5f5f189p-1, -0x1.18a24fac42f61p+0, 0x1.7336b2c08342cp-2,
        0x1.b6ede4d1bd3a8p-3, -0x1.1f4e7080b91bep-1, -0x1.a19ed86502a7fp-4, 0x1.b768be4144687p-2, -0x1.0082b9bc2f26ap-3, 0x1.2242904e9dadep-2,
        -0x1.8e6dc3df25078p-2, -0x1.9482f3a768cffp-3, -0x1.50b83d88732e9p-3, -0x1.979ab8294bce4p-3, 0x1.d074366f85dd3p-4, -0x1.f93417e5ef6d1p-4,
        -0x1.aeed5b12c355dp-3, 0x1.edf749bd57572p-2, 0x1.32db5121f5a55p-1, 0x1.9897834bb9d14p-4, -0x1.72b3b54c7cdfbp-4, -0x1.bcd95d76978a5p-3,
        -0x1.006125e92ed63p-2, -0x1.3e58592d18ef7p-2, -0x1.51bcb15363a3bp-10, 0x1.41fe48748bc07p-2, 0x1.27b8355b7ebc6p-2, 0x1.3fecdb4c9a983p-2,
        -0x1.e510705e0c484p-1, 0x1.4e756c26a421p-1, -0x1.a158cccfa20cap-2, 0x1.36c4ae184352cp-2, 0x1.fb42b3bf1b293p-7, 0x1.fbf4cdaf8c0afp-3,
        -0x1.fcc9e1256badcp-4, -0x1.9d5f586e6ddb2p-3, 0x1.720f5f158fbe9p-2, -0x1.aa51fb28a5233p-2, 0x1.f73d498edd092p-6, -0x1.b31e10f7c97d9p-7,
        -0x1.4ba0a0cdf3e4p-1, 0x1.180d50d6311a1p-1, 0x1.6fd63f09eca7dp-1, -0x1.1a7bcf030c295p-3, -0x1.d16bf1750bcf9p-2, 0x1.32a98aa89bf92p-2,
        0x1.5dbaa77affa26p-4, -0x1.53f36dc4086d7p-2, 0x1.4167e1072ddb1p-3, -0x1.c8e8208e3de55p-4, 0x1.ddf4946caa908p-5, 0x1.e811be34cf311p-3,
        0x1.3e040f52a6304p-2, 0x1.d850bb5b8c4f9p-5, -0x1.1b47cfff16b5fp-2, 0x1.51d6f7d67abe6p-2, -0x1.3080fcdf418c5p-2, -0x1.7c9af58ed0c6dp-1,
        0x1.cd8c7faa3e5b4p-2, 0x1.49c7e24f4a94cp-1, -0x1.843b026797b14p-2, 0x1.e1b8e9a2aef72p-4, -0x1.50bd4a2eac69ap-4, -0x1.206715160f75ap-3,
        -0x1.205350840f3bfp-1, 0x1.157b4ef23c21dp-1, 0x1.cb94af84acb6fp-1, -0x1.e8fab9c5a7903p-4, -0x1.5f6f0cd7ba619p-1, 0x1.a4b9fd69e50cp-2,
        0x1.a6461adceb67ap-3, -0x1.8550c7369c5ddp-2, -0x1.a7adb9b76c037p-2, 0x1.9e420a4e56001p-2, 0x1.77eeb67588a9bp-3, 0x1.c6b00389304dbp-1,
        0x1.984956aed9d3cp-3, -0x1.43dbb8801f8a6p-1, -0x1.d34b3fdff0cd8p-1, 0x1.022cb9792cc7dp-3, -0x1.1839fbacbc32bp-1, 0x1.c396507232cf6p-3,
        -0x1.5fa5ba213e7b4p-3, -0x1.3abd526e0178ap-1, 0x1.ec9835150fb6ep-3, 0x1.71ade6ed3eb58p-6, 0x1.f60071d9b12fap-4, -0x1.693d748a72c95p-3,
        0x1.3166685f94707p-2, 0x1.0b14105f93208p-1, -0x1.ef7bf64c715adp-3, 0x1.570c3ebd6bea9p-1, 0x1.05993ef3ca619p-6, -0x1.2a95d161bc6a2p-2,
        -0x1.7446201ce90eap-1, 0x1.41c6d64a4b587p-1, 0x1.80e41cc2685fep-1, -0x1.9cb8037f3367cp-2, -0x1.1620f8829087dp-4, -0x1.3dcdfeb7703dp-1,
        -0x1.69bd45fd0235p-2, 0x1.35d9332f70973p+0, 0x1.c87a78001667fp-4, -0x1.5674ee98aa075p-4, -0x1.678185f3600b5p-1, -0x1.3d1c918710188p-3,
        -0x1.00c88caf87afbp-7, -0x1.79972dd40556fp-3, -0x1.3e3e3ff1c3c3cp-5, -0x1.30f615934956fp-1, -0x1.bb5b3d17f65f9p-4, 0x1.cb4be7ce68a33p-2,
        -0x1.dee772f839f06p-2, -0x1.5176e979bd276p-1, 0x1.b89c69ab4bed3p-3, -0x1.138a95392c5f8p-3, 0x1.88e687d9f561ap-4, 0x1.17a2f843b188bp+0}));
    t.emplace_back("embedding.layer0.bias", Tensor({16}, {
        0x1.6ba1108c2c857p-5, -0x1.aae6b1fc5d456p-7, 0x1.1d96cb877ab6ap-8, 0x1.b17824b9775efp-7, 0x1.8265fdf2acb4cp-6, 0x1.7beb631b2d1dcp-6,
        0x1.a53836a0766dbp-7, -0x1.1af2e69556878p-9, 0x1.5713cc7649331p-9, 0x1.9ae0c252b88fap-7, 0x1.1ba22e69bb8e5p-8, -0x1.50a571578feffp-8,
        0x1.aa06486fa0ee7p-7, -0x1.f2a12c7a6b6adp-8, -0x1.acb3ad400f927p-6, 0x1.b2e047359509ep-7}));
    t.emplace_back("embedding.layer1.config", Tensor({2}, {
        0x1p+1, 0x1p+0}));
    t.emplace_back("embedding.layer1.kernels", Tensor({16, 16, 3, 3}, {
        -0x1.37d87b54f8fa3p-3, -0x1.a88029a188f15p-4, 0x1.a4a5eb77629efp-3, -0x1.72df19b615349p-4, 0x1.9c4f0b2d143e7p-4, -0x1.47c9f63101dcep-5,
        0x1.f8c9507776b5ep-4, 0x1.1213d22c7811ap-2, -0x1.f9cb435f20625p-4, -0x1.cfc85b9b894aep-6, -0x1.369c189710233p-6, -0x1.7e4668742ddb6p-3,
        -0x1.4f0db0d49197fp-4, -0x1.cf01fa9321ccdp-3, -0x1.346a1f1c0415ap-3, -0x1.7edec2a97f5aap-7, -0x1.2cfb254cd3d5ep-5, -0x1.4f98cc898235cp-5,
        0x1.23910371f7bdep-7, 0x1.182c223010b24p-2, -0x1.054de77ad4edap-4, 0x1.3cd4d9a551cdfp-4, 0x1.84e306c76492fp-3, -0x1.07ddbae9d43afp-4,
        0x1.13cd966f13c16p-3, 0x1.668893b81e8f6p-8, 0x1.7742e043fa5a8p-4, -0x1.6384706cd6423p-6, 0x1.c823f277f3826p-4, 0x1.f1398fa0e6034p-7,
        0x1.e427b124299e4p-6, 0x1.358110916fe3dp-2, 0x1.66085918836d8p-3, -0x1.7bb965e28e559p-6, 0x1.8bd686f6d553p-5, -0x1.6752285abfcbdp-3,
        -0x1.a05446d55d57ap-2, 0x1.85c37158e6c6bp-6, -0x1.89d2d153931bfp-3, -0x1.15c187364fcb7p-4, 0x1.10fcb64075eb2p-3, 0x1.07fedfe913d04p-5,
        -0x1.261c1d50c229ap-3, -0x1.622c8da50fcf8p-2, -0x1.db230f596db35p-3, 0x1.be8b6c11c3a4dp-6, -0x1.6f2f661fc0e7ep-5, 0x1.a2296ef3e4796p-6,
        0x1.fac2c56a02d96p-4, 0x1.376d33d6d8d41p-3, 0x1.a9031daea2fccp-5, 0x1.0d282a208e856p-3, -0x1.14928123efcbfp-5, -0x1.19c824a184ed8p-2,
        0x1.387e12e42228p-3, -0x1.94d17b497fa4bp-3, 0x1.f192fcd8aba4cp-4, -0x1.ebfe866877bf7p-4, -0x1.35f59cf5ad71dp-5, -0x1.83dc2886f6792p-3,
        -0x1.11bf71e3cf544p-3, -0x1.4ffe6d30e83dp-3, 0x1.2fc193dd32ab5p-4, 0x1.9a50848dca814p-5, -0x1.aa797f100d41fp-4, 0x1.4b7255b17fbep-3,
        -0x1.795890ec2a94cp-4, -0x1.894ef66df5a1p-4, -0x1.5f35b508f1fd2p-3, -0x1.5a2a13328029bp-4, -0x1.354caa765831ep-2, -0x1.83ccda0e554e2p-4,
        -0x1.0c05e9a16c2d4p-2, -0x1.19c7ec505c2a7p-3, 0x1.d48e2ec08abe3p-6, 0x1.2fcc94457e1cfp-3, 0x1.31c2588556f5ep-3, -0x1.4e9e1a5f97dadp-3,
        0x1.31a2e1777de85p-5, -0x1.088ee6fd67703p-4, -0x1.4f4c60392e866p-6, -0x1.1db6b29014456p-5, -0x1.6dfc2f0ae2e86p-5, 0x1.41af468b4d783p-3,
        0x1.93fd17f2a5987p-3, -0x1.1c8cd9523535fp-3, 0x1.6b3c049488517p-3, 0x1.b155f20cbcb67p-3, 0x1.0c817ba44d92bp-4, 0x1.fc1713edcabf2p-5,
        0x1.8547f20d182b5p-4, -0x1.89c19b83ef6f5p-6, -0x1.eeda64cbe0c5p-6, 0x1.3f1e89e632987p-7, 0x1.930f0cc9377cfp-5, -0x1.291198fe2e494p-4,
        -0x1.4cf6f2fb92b33p-6, -0x1.0835b2ccdb8bap-6, 0x1.40e51fa5d7c68p-8, -0x1.73573288733cep-4, 0x1.64de21f76af33p-4, -0x1.4f02ab977e69cp-3,
        0x1.dd14352b7575p-6, -0x1.02f9daebd93eap-4, -0x1.055d893eb99ep-7, 0x1.0197880d1cbbep-4, -0x1.48b0d5696e892p-4, -0x1.4a886b643495p-3,
        0x1.b702bb23ccfcap-4, -0x1.eb5be6c161e7dp-4, -0x1.b7f97b7ec026fp-7, -0x1.29efd3d392d9cp-4, -0x1.129b0621bf489p-3, 0x1.4992e92c7287ep-3,
        0x1.c13000638d69dp-4, -0x1.7aaf322574941p-4, 0x1.83dfb293cee23p-4, -0x1.428674d78c8a3p-3, -0x1.9f1c58a6b3bdfp-3, -0x1.9c4fce0fca575p-6,
        0x1.b963737de1eacp-5, -0x1.7051de09606d3p-4, -0x1.83f343cd3b5e1p-4, -0x1.465ec7b454641p-5, -0x1.3c62a27a97f74p-3, -0x1.8b36ef3c793p-7,
        0x1.060a526c9bdd1p-2, -0x1.2dcedd71c008dp-4, 0x1.d29250852b382p-5, 0x1.16dbce783c525p-7, -0x1.5caeb98236d1bp-5, 0x1.bda165adbe8e3p-4,
        0x1.2183257558e18p-4, -0x1.ef7b9e4164d1dp-8, -0x1.7ed4d8f27e63fp-5, 0x1.67d0b598f6964p-3, -0x1.1fec97b414a24p-2, -0x1.b162abc19824p-3,
        0x1.9f5e969af1883p-4, -0x1.33da4cc39b162p-3, -0x1.b96589cdb1163p-5, 0x1.30f5b9b804418p-3, -0x1.16ada7eefdcc9p-3, -0x1.01286dca0b978p-5,
        0x1.36a7493ddec06p-5, 0x1.d159b9f75326fp-5, 0x1.1b5489233ca8p-2, 0x1.2b6e15fdf59d7p-2, -0x1.9e4f2a38ca17ep-3, -0x1.1ae2587fae73dp-3,
        0x1.3557a74150b53p-5, -0x1.621be5f69dcf4p-4, 0x1.002b627ceb286p-4, 0x1.a09435a2d4f0fp-9, -0x1.a82eb42c7dbc8p-7, -0x1.6de57bf7840ap-3,
        0x1.bbdc594859923p-3, -0x1.9b00fc5c9fdd4p-4, 0x1.cd9f0119e1a46p-3, 0x1.5fa3d31bc0f52p-5, 0x1.d10cf40f7c02dp-5, -0x1.8aeadf486c318p-5,
        0x1.05eaf89273431p-6, 0x1.fcb1cc1e7d277p-3, 0x1.f3051a63f8b44p-5, -0x1.834dfdc61ad96p-3, -0x1.76f53a059ec7fp-5, -0x1.96611c25c4851p-4,
        -0x1.3f3f74c10f9b1p-5, -0x1.f3eb0a6790dc8p-6, -0x1.85ceac2163247p-5, 0x1.41ff7adc85779p-6, 0x1.17fa5fd53f71ap-3, 0x1.3daa3bba18ccbp-3,
        0x1.3d4ce0e33a593p-3, -0x1.f5745e76cf918p-3, -0x1.3a8466c8a1b63p-6, 0x1.c218ab25f35cap-4, 0x1.3edac887308f3p-3, -0x1.eb32c621902a6p-3,
        -0x1.c56d4a7c3e1bbp-5, -0x1.8fcfedc6a6e8fp-5, -0x1.0eb5172133191p-3, -0x1.e5b0277c64e5p-7, 0x1.2e66b66870fb7p-9, 0x1.664e35afdb6ddp-5,
        0x1.9d9dcad724ef4p-4, -0x1.d7b12cba020e7p-6, 0x1.ea2b5c329aa68p-3, -0x1.9e0c6800e80d7p-4, -0x1.7a67a7ba664c9p-3, 0x1.3e7c4a4b7caddp-3,
        -0x1.1e0441eb19b1cp-4, -0x1.1438ffa3e2e9ap-5, 0x1.00c033062d415p-4, -0x1.05ae0d00dbabdp-2, 0x1.507795c1d7e22p-3, -0x1.d915755580482p-5,
        0x1.c68a253c150e7p-5, -0x1.6695a7dcee892p-4, -0x1.9ccbd5edfc80ep-3, -0x1.87d54eab72d3p-5, -0x1.fae8f9ecf4616p-4, 0x1.5280e5993466p-2,
        0x1.e5aafd0d046a1p-5, -0x1.f7aea3c5df6aep-3, 0x1.cf66b5ee217dp-4, 0x1.e973d55b04accp-4, 0x1.b78646d557f88p-4, 0x1.3a9f04b15f222p-3,
        0x1.0d3fc6f42d0b9p-3, 0x1.56205a04f8e6fp-10, 0x1.cbf5a2612927ep-4, -0x1.ff8c103243631p-3, 0x1.1d12051f443c8p-5, 0x1.ec6d2cff3c871p-5,
        0x1.84e756cecbc8p-3, -0x1.03245a499b23dp-2, -0x1.cb6e8d59acee6p-3, 0x1.1995913f4a9adp-5, 0x1.c739a4d5821bcp-5, 0x1.5f325a04ec8bep-5,
        0x1.fe0b4c893a485p-6, -0x1.b7d4fb344e28dp-4, -0x1.2f88171b2bd2bp-4, 0x1.8a3b80c7495a3p-4, -0x1.38aef7af4de79p-5, -0x1.1cebc44418d5p-5,
        0x1.a9bcb92285441p-5, -0x1.b2b4ee89a30fcp-5, -0x1.06e74371449ccp-4, 0x1.a4d9327194128p-3, 0x1.2749e0a4a2d6cp-4, -0x1.c858b53407c08p-4,
        -0x1.5d6f8699e4a93p-3, -0x1.9d8899d196ea7p-6, 0x1.29746595b9d91p-3, -0x1.5d9f8e1e31182p-2, -0x1.153588fbc169ap-4, 0x1.1a3586bd2732ep-4,
        -0x1.4546dc9588ca4p-5, 0x1.61603f72232bp-4, -0x1.35ea5240337c4p-5, -0x1.ec7c803df3f4ep-4, 0x1.92bbfc668469cp-4, 0x1.4182072cde28dp-6,
        0x1.fcf465337fb18p-4, 0x1.124043d8c3034p-5, 0x1.ccfa736ce8d24p-4, -0x1.a5b7423d72fb8p-7, 0x1.45431dfc1ce85p-6, -0x1.34f3cd6aab95ap-5,
        0x1.b24fb06e2861dp-3, 0x1.649c0514fbc4dp-5, -0x1.a4fe041ec763ap-5, -0x1.1b53b15ff92dp-9, -0x1.49934e196d458p-6, 0x1.a53ed065dac31p-4,
        0x1.d88086c34b696p-4, -0x1.5e9804d5cba4bp-7, -0x1.1ff5d457db66ap-2, -0x1.5ab9dec2acdaep-3, 0x1.d4980ce438a87p-7, -0x1.6e06115f34686p-3,
        -0x1.69115dc06032fp-4, 0x1.f1cf023c748aap-7, -0x1.15326c5133081p-3, -0x1.ac10d945e936ap-4, 0x1.49c3667c77cacp-4, 0x1.ace93617a750ap-4,
        0x1.5ba09bb9365a6p-3, 0x1.06a2c324bca47p-3, 0x1.0eda759940c51p-4, -0x1.38afd19baf128p-4, -0x1.0e2d2acc690a9p-6, 0x1.96fc012f18fdap-5,
        -0x1.2c5b36989e7a8p-8, -0x1.5e23b17436601p-3, -0x1.7a50e7795957bp-9, 0x1.1f29ef87c601ep-2, -0x1.3f50a4215b5f9p-4, 0x1.3fa325ddfa07dp-5,
        0x1.71fcce923da2cp-3, 0x1.0221c34461c5ap-3, 0x1.876139e53ee64p-6, -0x1.51dd0379343b1p-5, -0x1.eda0c60fc686bp-3, 0x1.7d83aa168efbep-5,
        0x1.0e22eb8819ea3p-7, 0x1.3beb3a88035e8p-3, 0x1.0c74f30eab269p-4, -0x1.7a9eae37ca8aep-3, 0x1.336a58105dc14p-10, -0x1.4ed6fc078bfcp-5,
        -0x1.4ff2c2eff01ffp-3, 0x1.ef7bdab67dec2p-7, 0x1.68eeb9adec652p-4, 0x1.2531f5dd93dc9p-3, -0x1.5ea2713eb9fdcp-3, -0x1.3996c19f9ea1ap-6,
        -0x1.553fcb68a64adp-3, -0x1.416ef37fe52efp-7, -0x1.121b6ca661f41p-2, 0x1.41dc5f8ff6f65p-3, -0x1.ae9ecf068d0b6p-10, 0x1.4b149d2d13ac2p-4,
        0x1.c51b07c8249b1p-6, -0x1.1227f7b84946fp-3, 0x1.fbc431fd29d0cp-3, 0x1.353a8c873cfedp-3, -0x1.e9de8e66c41cp-4, 0x1.9bb0a268ecdcap-4,
        0x1.845137fefec88p-4, 0x1.4fdaa8a1c02cdp-6, 0x1.7039bddf9b28fp-4, -0x1.5fbfb6fbb38fdp-7, -0x1.7fdac9789e116p-3, 0x1.c9b50a0ee157dp-4,
        -0x1.482df1deb3954p-3, 0x1.c4f03885a09dep-5, -0x1.02f6ab1fca367p-4, -0x1.2988425a1ac1p-2, 0x1.9c846925a8af7p-5, -0x1.6338982d618d5p-3,
        -0x1.d6d5904085fc9p-4, 0x1.bacf11b10593ep-4, 0x1.85649bdacc62fp-3, -0x1.3bf2b4fa70185p-4, 0x1.39ba3436de852p-3, 0x1.f25053de571f3p-4,
        0x1.134014fa00e37p-7, 0x1.4e0eb40830c63p-6, 0x1.11fe60d0435dfp-2, -0x1.5b35c70e43b0cp-6, 0x1.74b554c048809p-3, 0x1.9fe1bcdac4b2bp-3,
        -0x1.8d0e62be305bep-4, -0x1.7e0cdd4eb4688p-4, -0x1.d08db7e510ee3p-6, -0x1.22bc1ee4564efp-4, -0x1.5a7472a2c2136p-2, 0x1.1461f4e0861eap-5,
        -0x1.3429a2511f095p-3, -0x1.18f14a78e9696p-3, -0x1.0e211df4dd66ap-4, 0x1.f77979bfedea2p-3, -0x1.43c13be3d0014p-3, 0x1.06a6003d083b9p-7,
        0x1.4dd6bc1c00da7p-7, -0x1.a7d71836f2592p-6, 0x1.4cb0c40b8ea46p-2, -0x1.95c968db4258ap-5, 0x1.5df74bbd51e4p-4, 0x1.cadf362e4b297p-4,
        0x1.31fe0593c0debp-4, 0x1.114c91d341a7dp-2, 0x1.364bf88b6a0cap-4, -0x1.02791f3b24364p-7, -0x1.0a3eec96db0b8p-4, 0x1.25fad17b3a26ap-12,
        -0x1.6089e8f1f5c85p-7, -0x1.da6a668ec71bep-4, 0x1.e7c5fd3391555p-6, 0x1.73b52b8148e18p-5, -0x1.5581fb1abe663p-3, -0x1.855bfae6b3c6fp-6,
        -0x1.a19ee8730d5fcp-6, 0x1.b35e8606174fbp-9, -0x1.dc63302296055p-3, 0x1.eba62ae4ae7bbp-8, 0x1.e200c33c61d5p-5, 0x1.98e636f34e22p-5,
        -0x1.d698a7ee62d67p-5, -0x1.0f74757dd41cep-3, 0x1.075ab1acc5628p-3, 0x1.9918cb1b705e7p-7, -0x1.180e5eee88882p-3, 0x1.b27c8c63e43e4p-3,
        0x1.96e483e5e38f7p-6, -0x1.68cb11904df05p-4, 0x1.13988efdc8bf1p-7, -0x1.cf0209d3879d8p-9, -0x1.3c6fedf2cbbe7p-4, -0x1.9ea379c832f9ep-6,
        0x1.d81148992ee9ep-12, -0x1.e26e5925cff13p-4, -0x1.f29ccefb7f67cp-4, 0x1.d3e92a94f57b1p-9, 0x1.e0e96aaeb779ap-4, 0x1.0400dc4352b73p-2,
        0x1.8b9082b7c6cc3p-4, -0x1.c6b0ed91a4ce7p-4, -0x1.3821a8ece88d6p-3, -0x1.10168f646add9p-3, 0x1.6081eceba8a23p-2, -0x1.0b19eaf0eb1b2p-6,
        0x1.adb4c073fc694p-7, 0x1.49189af3b9851p-3, 0x1.3f439baef9a64p-4, 0x1.f0188e09d3fafp-6, -0x1.1337ae507949p-4, -0x1.61f4935293b77p-5,
        -0x1.36b82dd23b943p-6, 0x1.0fac69640de5ap-4, -0x1.5251d5cb0eedfp-3, 0x1.16f9e5dedb208p-3, -0x1.3137552fa1d34p-3, -0x1.63d3d6f899542p-4,
        0x1.89bc6cdafdcap-13, 0x1.e0bc3448068ep-4, -0x1.2b0d60a839cebp-3, 0x1.75651dba728bcp-4, -0x1.1eb68d57afc56p-10, -0x1.8f1fbf533547dp-4,
        -0x1.60fa80bd56cb8p-4, 0x1.e2609dca84164p-4, -0x1.48092003933dfp-6, 0x1.35d988233b661p-5, 0x1.3437d88144d57p-4, -0x1.a15104bad9b12p-4,
        -0x1.800d961e7f54cp-7, 0x1.5d22e8b2231edp-5, -0x1.2552e1145e045p-3, -0x1.072128a5be0edp-4, 0x1.e958005c6e8dbp-4, -0x1.903d0b842a8dfp-6,
        0x1.fd337d67bf4f9p-7, 0x1.5cb004709e95dp-3, 0x1.b982dbd72a9e2p-6, 0x1.da3392788e515p-4, 0x1.b6653d5569374p-4, 0x1.24b122f420fbp-5,
        0x1.3457ea3f3e90cp-4, -0x1.a5a72ab146469p-6, 0x1.b50038cfb6cabp-4, -0x1.e7e600c5f2519p-3, 0x1.48e39b7bd68d1p-2, 0x1.255d0e4c05ab3p-2,
        -0x1.3abd2a9d2cb38p-4, 0x1.170885c847993p-4, 0x1.9be91a1570942p-4, -0x1.0645b73b9427ep-3, 0x1.1f5cb82f97e29p-4, 0x1.f428195577d0ep-3,
        -0x1.2384ee8d858f7p-7, 0x1.12e033511b7c2p-5, 0x1.046e469b9539fp-3, 0x1.b076630c52ddcp-4, -0x1.da302267791b2p-11, 0x1.b3f41bf30a6bp-4,
        0x1.7b1249675de9cp-4, 0x1.1fc4194965957p-3, 0x1.fc8bb50f4aa4dp-5, -0x1.688df56f68469p-4, -0x1.c53831c6ce7cap-3, -0x1.d176df1d377d2p-5,
        -0x1.7e09274b7bddfp-6, 0x1.509d0ddce9119p-3, 0x1.0d4922bd4c30bp-4, 0x1.662718158cb2ep-6, 0x1.566bb40ab5cd8p-4, -0x1.e723a163a37e7p-3,
        0x1.5fc604da01558p-5, -0x1.cf84245b0ac7cp-8, -0x1.1ee4eacdd4a75p-3, -0x1.c5aa0c464fcdfp-5, -0x1.ead51c79bc5fap-3, 0x1.ae083c178c546p-3,
        0x1.03cbef541a7c7p-4, 0x1.a05281953c7a3p-5, 0x1.0863da75e13b2p-3, 0x1.2314bb036d5f6p-5, 0x1.85584ffc1742ap-7, -0x1.a947ad7860aebp-4,
        -0x1.af1fc601e9b11p-4, 0x1.29d3b8b0f6fbp-5, 0x1.44624cdf8efaep-6, -0x1.f593bf4aee662p-4, -0x1.97d3404594024p-4, -0x1.4312c4e7692e7p-4,
        0x1.218f27cb2de63p-4, -0x1.75a70d893c74fp-3, 0x1.70a99c6f04ddbp-3, -0x1.25200f08100e2p-5, -0x1.5aaac63204768p-6, -0x1.c5adcc897d824p-5,
        0x1.429d71a5e7b08p-4, -0x1.62a99a34d4e92p-5, 0x1.c65c7df379a69p-6, -0x1.85ff9d9d8b298p-3, -0x1.c86d10d9ea93cp-4, 0x1.3da7d34a0aaa7p-3,
        0x1.090a74a07d12ap-8, -0x1.d14eb2fd2a6bdp-6, 0x1.3c1b2c44a24eep-4, 0x1.7a736bece03dep-3, 0x1.100621ab3b4ffp-3, 0x1.ec22c3f2eb0a6p-7,
        0x1.b4c62a32c7a17p-5, -0x1.61fc765e98e92p-4, -0x1.14e1eb6b993a6p-2, 0x1.7b2d9156a3508p-7, -0x1.ef7088598e9cbp-7, -0x1.41a5fc6eab39ep-4,
        -0x1.a3f023a102442p-3, -0x1.75366fa35544p-4, -0x1.f4b86ceb683a1p-4, -0x1.985f2e5743768p-3, 0x1.36e829abe9b54p-2, 0x1.8111566fcb22dp-4,
        0x1.7199e9bcea758p-6, 0x1.72710c1fae4f8p-5, 0x1.eb999ebf93accp-4, 0x1.c3d36d18cc407p-3, 0x1.004e03f3a8f14p-3, 0x1.eaa6f46b514e3p-5,
        0x1.0465ed7c88132p-3, -0x1.4973ad599b87dp-6, -0x1.d8e9bab28974dp-8, -0x1.c49a144fafcfp-4, 0x1.65b5833640423p-5, 0x1.8d0ab3c51edccp-4,
        0x1.ddd8cef3b4ed3p-9, -0x1.dd537d5a86834p-4, 0x1.0d34436e9cbdbp-4, 0x1.f170d2f1005cep-4, 0x1.839c4e9e766a3p-6, 0x1.23c1b7b1d1022p-4,
        -0x1.f1383d6291348p-7, -0x1.3e74508fe690bp-3, -0x1.ec441a838312dp-4, 0x1.3098fa3aa8755p-4, 0x1.ff7d29c354b1dp-6, -0x1.7be1b150d0086p-3,
        0x1.316ceca4189f9p-10, -0x1.2eb082f02776p-3, -0x1.b5745380f2689p-3, 0x1.a8b21f6ec3906p-4, 0x1.1de44468bda76p-3, -0x1.8fc02de080333p-6,
        0x1.2755269bbb269p-5, 0x1.be3d52281ef3cp-8, -0x1.308fdc15bc76fp-7, 0x1.5bc8345fbccadp-5, -0x1.87078992e67b3p-4, -0x1.e558f0cd7ceb3p-4,
        0x1.2b43e0cbf870cp-4, -0x1.7a55ab480954dp-4, -0x1.35cb8cbec7f7p-2, 0x1.f1f083fc4aa16p-4, -0x1.402d306adfc8cp-6, -0x1.492e145f8f49p-4,
        -0x1.9ffb222ddeb17p-3, 0x1.7c1e7999bc4b2p-6, 0x1.e27b982591c93p-5, 0x1.753e9816511b5p-3, 0x1.07a255534de08p-3, 0x1.69bdfeb898882p-5,
        0x1.35c02507b26bep-5, -0x1.b60a5150ce6d8p-4, 0x1.6c1c73f1aa0b6p-8, -0x1.b8deed3054bap-4, -0x1.7f71635d47c4dp-4, -0x1.1359362f90d9fp-3,
        -0x1.3ff01b4096676p-3, 0x1.aa9abb5fca4bap-5, 0x1.6aab9587eb55p-5, -0x1.5063dde3c0b14p-3, 0x1.a6fe03e1e1016p-5, 0x1.5ba5f6bdc79fep-8,
        0x1.90842efbf21afp-5, 0x1.cce8300cde2f4p-4, 0x1.113c3569f992p-6, 0x1.364553478ee1dp-3, -0x1.c64aa63d150a5p-3, -0x1.736004d346742p-5,
        -0x1.c0ad771c32f0ap-3, 0x1.48e1946fd5083p-6, 0x1.24809736b4cd4p-6, 0x1.0d2b481a04bebp-2, 0x1.26eea13603abfp-3, 0x1.6fda84380c4bep-3,
        0x1.2c83830d56fadp-6, -0x1.34c5b827ae905p-3, -0x1.e756db3bc44cfp-5, -0x1.449c47eb1e82dp-5, -0x1.e3b92c9a5b127p-3, -0x1.1275eb76d9ebfp-4,
        -0x1.c7bd4ef6e51b1p-5, 0x1.dcf0188c9affp-4, 0x1.4cc7573bcd29p-4, -0x1.44929bcd67525p-4, 0x1.83b2eb7bf1a5fp-5, -0x1.03261ac4b24adp-3,
        0x1.476aedd99c6d9p-5, 0x1.77a575691955ep-3, -0x1.95917dd04b946p-12, -0x1.b84559def34abp-5, -0x1.fbbcb2b0fb9b4p-4, 0x1.522f62870fc63p-4,
        0x1.61560f3a4f12dp-3, 0x1.3cf69eae1974dp-4, 0x1.e453bf82b639ep-4, -0x1.48b09f0a05731p-3, -0x1.48b824f9f068cp-3, -0x1.2e8563cc08ec3p-5,
        0x1.ba985336d293ep-4, 0x1.2b932baaa1fa6p-3, 0x1.3ef5b84b53a57p-5, -0x1.1a3f52a02cdeap-4, 0x1.708b0ac42d2f5p-4, 0x1.65055c09c547bp-4,
        0x1.2a417594339e6p-3, -0x1.2735c0a6095dep-6, 0x1.6d1db68545515p-3, -0x1.586a681cd0bb2p-6, -0x1.1eda1a703c7afp-3, 0x1.1f714236dd34ap-3,
        0x1.d4c54cac7a7b5p-4, 0x1.79bfabbcdc0d9p-5, -0x1.40895a7657797p-4, 0x1.a56624b8e262cp-5, 0x1.090f56f2edce2p-7, -0x1.960b2d9993ae1p-7,
        0x1.1dce029b9f4e3p-4, 0x1.6b124c1d3d10ep-5, 0x1.ee944de8965dep-4, 0x1.338a8f95d225dp-3, -0x1.a0b11e2f40fe6p-3, 0x1.ec84c467c76d6p-5,
        -0x1.983011367e128p-5, -0x1.92e58082081e5p-5, -0x1.6f91d989dd85dp-3, -0x1.9e8c979cdbf0ap-6, 0x1.6bb300d88efeep-4, -0x1.806013945f3d9p-4,
        0x1.0adeca84d44f8p-4, 0x1.e039310e8a185p-6, -0x1.523558ab31726p-6, 0x1.3a2bbeea581f9p-4, 0x1.a134aa3c7d913p-4, -0x1.2bafd22ffb7ecp-3,
        0x1.cf106057cc998p-6, 0x1.b61fc78b5d0bcp-4, -0x1.8c07cc935d3efp-3, -0x1.5ab48f4cdb7d3p-5, 0x1.1ad7904795437p-3, -0x1.4f208ebc665b1p-4,
        -0x1.b535a7eaa516bp-3, -0x1.100d777fa3f6ep-2, 0x1.804e963e08e3ap-4, 0x1.2af8abf7581aep-3, -0x1.bfc898774877ap-4, -0x1.e2f053b0cc291p-4,
        -0x1.29aa6346298e4p-3, -0x1.12be0fc9178c3p-2, -0x1.f7f517e983789p-7, 0x1.32fad5e8722e2p-5, 0x1.42f1568f655a5p-3, 0x1.0f651c55737d8p-6,
        -0x1.54baeb82d7922p-4, -0x1.7dee83be0239p-5, -0x1.1fe1433402331p-4, -0x1.1d8555d0c2fe4p-3, 0x1.24e23296216dbp-2, -0x1.c34a93cf6a8f1p-4,
        -0x1.2e00afc172a66p-4, -0x1.dbfb1fcc903c8p-5, 0x1.d863c6af0158bp-3, 0x1.0bc21091f8951p-6, -0x1.b3ffdccaf1a6p-3, -0x1.8216051237ed7p-4,
        -0x1.fdf727460e6b8p-5, 0x1.cef44265deb8p-4, -0x1.cc33443c68f4cp-3, -0x1.ebe581a9ea6d1p-4, 0x1.36f3bfb210727p-3, 0x1.8ead99c1bb44dp-4,
        0x1.a5ff16139549bp-6, -0x1.57c78e03d114cp-6, 0x1.b455a0dbaeb51p-4, 0x1.48bb16a09f025p-3, 0x1.d5909def283afp-3, 0x1.88feba1023e29p-6,
        0x1.54e617b2fea1cp-7, 0x1.3c8894804e189p-6, 0x1.c18673fce2355p-3, -0x1.291a1d8c17c87p-4, -0x1.992aa49e1a47p-3, -0x1.fbfa3ea312cbp-4,
        -0x1.1da2fc9a24e9dp-4, -0x1.61f35792445f5p-4, -0x1.3d9c79feff0c7p-4, -0x1.0ede402b8d06bp-3, 0x1.8d84ff32a7d8p-4, -0x1.1a3e92a291bdp-3,
        0x1.8e8476c59281ap-3, 0x1.5eda7ec648badp-3, -0x1.54d90f93cd7bdp-6, 0x1.b92ce7fa6074cp-4, 0x1.12a0bf86bdb0ep-4, 0x1.d8b577923c073p-5,
        -0x1.efd7efd5a5493p-6, 0x1.84b79cf38b6dfp-7, -0x1.f4fdc41a44a9bp-3, -0x1.0ccc47d11ea53p-3, 0x1.7d5c9425edc07p-3, -0x1.2aa65c88b7178p-5,
        0x1.a2dbf82ef3897p-5, -0x1.e0e1a61b53b99p-7, 0x1.a62633bd3018ep-6, 0x1.184344483564ep-4, -0x1.dbc1b81b12554p-5, -0x1.9f54448aff5b1p-3,
        0x1.87e1130dc305p-5, -0x1.1059d0f96d0efp-4, 0x1.fb357069e744bp-5, -0x1.5c132e1c2c778p-5, -0x1.5a045038b19e6p-4, 0x1.04a8ba5417b94p-6,
        -0x1.9eb778fe39e6bp-6, -0x1.e58ba01e17643p-3, -0x1.85d364982c946p-5, -0x1.bc8ba89640062p-3, 0x1.e07d404da4d6ep-5, -0x1.6bb5e54815079p-4,
        -0x1.a3c314451f70dp-3, -0x1.16ac4e7cf217cp-5, -0x1.cc53b60d6bda4p-4, 0x1.a820fa7c7c20ap-5, 0x1.85d5883bccb2fp-3, -0x1.eebce42efaf14p-3,
        -0x1.17a8b22629aep-4, -0x1.d31e1310cc4b6p-4, -0x1.a352479d9174ep-6, 0x1.5695d833e3c72p-4, 0x1.a57c87d7d6bbp-5, -0x1.c2a5be42fdbd1p-4,
        0x1.1d2d5743870c2p-2, 0x1.408b47464bdb3p-3, 0x1.a6952f7139833p-4, -0x1.32f512d2e7393p-6, 0x1.b3779d2ae370bp-6, 0x1.ed097da30c95ap-4,
        0x1.f62c94cbb4ca4p-5, -0x1.7eb773f28589ep-3, -0x1.b0e3cd9811757p-6, -0x1.3de58419f08f3p-3, -0x1.46c3f096e9f57p-6, 0x1.aef5e102d2947p-4,
        -0x1.cb3d694cce93ep-5, 0x1.dbbf179c34312p-3, -0x1.150ae756e9bc8p-4, 0x1.9947f3220ccd4p-3, -0x1.cd852b57cc994p-7, 0x1.e7e48b2f92823p-6,
        -0x1.59a99c018eac2p-4, -0x1.3f1dfaf652fc9p-3, 0x1.64330e1be3039p-5, 0x1.efbe2387aca5bp-3, -0x1.3a2c2bfdd26c2p-9, -0x1.630a32f33e65p-3,
        0x1.11d12abad3f79p-3, 0x1.d844428403816p-5, -0x1.197f8f74fe12fp-5, -0x1.79d07f6ad50e4p-6, 0x1.5da3b38fe37f1p-9, -0x1.a1f1b92e5ff92p-6,
        0x1.45e366119fcc6p-5, -0x1.030e1ae2ceap-3, -0x1.1da807ff5799ep-4, -0x1.3c9bb552feaf3p-3, -0x1.8cff68c6bc595p-4, 0x1.96039fd28de78p-6,
        -0x1.10d65bd6a6212p-4, -0x1.f5e5007120768p-5, 0x1.22d29cd7321b1p-2, -0x1.530c450220e7dp-3, 0x1.b52e749f99b49p-6, 0x1.3cd2ef5807b0ap-3,
        0x1.90f323786e8adp-6, 0x1.65f65fe98a22ep-7, 0x1.75fb6a6d261aep-3, -0x1.1ce84e5c07ed2p-5, 0x1.502325dc2a96cp-3, -0x1.156ada63d6dd7p-8,
        0x1.2a0833237b1a1p-3, -0x1.120de82a6e76bp-3, 0x1.f6ee7f7deba0ap-4, 0x1.4a2dffcb392ep-3, 0x1.2f2fb25cc8906p-4, -0x1.6fa6f89496e4bp-7,
        -0x1.6dc8f45f70227p-5, 0x1.d8ff99ca667f2p-4, 0x1.7deae9be67babp-3, -0x1.394e10018157p-2, 0x1.1d1e358e6a71cp-3, -0x1.9393d5e549fa1p-3,
        0x1.45bf289e53e92p-5, -0x1.6643b92f6b563p-4, -0x1.182b948a64c18p-3, 0x1.074b448dd74dep-3, -0x1.2833942813e9cp-3, -0x1.446096c0d0db7p-5,
        -0x1.824585d85ddabp-5, 0x1.37230d40a4538p-6, 0x1.069210dd3ebb2p-3, 0x1.13504ee4eb2dcp-7, -0x1.78d8dc0a90dcfp-4, 0x1.f6184017e0d97p-4,
        0x1.f9547aaba424ap-4, -0x1.8d376123c280fp-3, -0x1.e48d074765a62p-6, -0x1.7150f759944edp-6, -0x1.87dd7b59206ddp-6, -0x1.312a988a04129p-6,
        0x1.45748f41a164ep-2, -0x1.d68d2f45f02a6p-6, -0x1.093cde5daab6ap-5, 0x1.04f7b0f2001c3p-3, 0x1.5d73fd370f03bp-3, -0x1.af84f0ae83353p-8,
        0x1.24b68c0e2220ap-4, -0x1.71dc952f62e13p-6, 0x1.5f2dc8c92e051p-10, 0x1.1b61adc97b5f5p-3, 0x1.0986d5070cb77p-9, 0x1.c2b3bb0c2ffbcp-5,
        -0x1.33ffccb95aa37p-3, -0x1.5e242ab6bfd26p-4, 0x1.6056ea7856e6ap-4, 0x1.0776d7e8c47adp-3, 0x1.2dca47991d2fdp-3, 0x1.7938a81eb8135p-5,
        -0x1.3f12a55ddcfdep-6, -0x1.cf36493ba3075p-3, 0x1.1423a02b7f606p-10, 0x1.fc1f3f5dd5b6ap-4, -0x1.9324f9cf94a75p-6, -0x1.3f8a88b3e5c62p-4,
        0x1.135ea48c70fe7p-3, 0x1.b3c447b995ccp-4, -0x1.9175d27823ed3p-4, 0x1.6f97e9fd322f7p-4, 0x1.7125ab09871c9p-3, -0x1.4f0fbf57eebf3p-3,
        0x1.a92137c68a5ebp-6, 0x1.7014087e23859p-5, -0x1.87aa6e24ede9fp-3, 0x1.2b0c51be18f1fp-3, 0x1.6183353a2ebd2p-3, 0x1.4587576afd04cp-5,
        -0x1.7247062e8e6b8p-8, -0x1.aab80f5060badp-4, -0x1.c0438f85a606p-5, 0x1.4d55bac0c7c44p-3, 0x1.af020dd87467cp-3, 0x1.d6bb4a1e217fep-7,
        0x1.0a5b684ddc16cp-4, -0x1.71e8d8dce71c8p-3, -0x1.0d4c8165bc132p-5, -0x1.d3caf9240f6dep-3, 0x1.1e7e4cd2decdbp-2, -0x1.20eb8b3399498p-3,
        -0x1.a1c808722d2c9p-5, -0x1.b3eb2d16c9726p-5, -0x1.7012ac44fdda1p-5, -0x1.d6174e8f20dc8p-5, 0x1.11debd2e30dd2p-6, -0x1.2e1ea9fe81e91p-6,
        0x1.2822eafba8b8cp-3, -0x1.b540d1bded187p-3, -0x1.7b39da4b8ccfap-5, 0x1.72bc9a1b7c15dp-7, 0x1.bfdd16fb47018p-5, -0x1.acc0168be70cap-4,
        0x1.8bdf0b478fcd6p-6, -0x1.bd44d59810958p-6, 0x1.eae38f1381247p-8, -0x1.4e752975a9dc2p-5, 0x1.301adf6b77c9p-3, 0x1.de1f2a35d125p-4,
        -0x1.5d28e00c43474p-4, 0x1.f7760d96d4a12p-5, 0x1.01fbf5e791ad2p-3, -0x1.1f240d0cb87efp-4, 0x1.68d188e470fp-5, -0x1.e58a627b006eep-4,
        0x1.909ec93db4ad2p-3, -0x1.dc050c4fb4244p-4, 0x1.90039b2d5f46bp-4, 0x1.360297c2db007p-3, 0x1.3d1c45154b0ebp-4, 0x1.45a1aa1ee827cp-4,
        -0x1.a095cf85b75e1p-6, -0x1.d44d47acab194p-5, -0x1.f33b488f4ed6ep-5, 0x1.e8b124dbe6096p-6, 0x1.e61f0bfc6e8f4p-4, 0x1.237fbd481e78p-3,
        0x1.06676da7fdf5bp-4, -0x1.5be3a2020a919p-4, 0x1.0e854f172ead6p-4, 0x1.dfc0e09c2ff04p-4, 0x1.cc84477c04babp-6, -0x1.754cc67786d89p-3,
        -0x1.9656cc35c26b7p-5, -0x1.00f7270d0166ep-6, 0x1.52bb2f7597b1fp-4, 0x1.94965e416669p-5, -0x1.b5d9ade162dd9p-9, 0x1.e2ae6599a6323p-3,
        -0x1.362e8a64ab61bp-4, -0x1.734d0c443ed85p-3, 0x1.e4a308e6d6bbdp-6, 0x1.8117e24a63b4p-3, -0x1.1e04ef6b5c8d2p-4, 0x1.d85baab6d96a8p-5,
        0x1.04f6a50f6089bp-9, -0x1.2c1c1e5c32027p-5, 0x1.8eb2bed41d56p-5, -0x1.49b1960cbf785p-4, -0x1.2f53e11da25fbp-5, 0x1.6dfb02a71e29ep-3,
        0x1.b995706c09da5p-4, 0x1.24f8ed49f7bd2p-3, 0x1.53cb757a4e831p-6, 0x1.ba943aa987af6p-4, 0x1.a3e0171800bebp-3, -0x1.56c521f441a8p-3,
        0x1.501cdfb8b314dp-6, 0x1.c701dd9647ba3p-3, -0x1.6d4f36b56ca7ep-4, -0x1.bef7e72aab927p-7, -0x1.0a6b4f8737544p-2, 0x1.c6513d997e237p-6,
        -0x1.11138b3f0f37bp-6, 0x1.b21057b61063fp-5, 0x1.e596a2f678cafp-5, -0x1.510d587fc0e7fp-4, 0x1.ea0005abc3227p-5, 0x1.2cca0c4c249cbp-3,
        0x1.a2fbe795f9e44p-6, 0x1.75916e3720b3ap-4, -0x1.023bbd27d67bap-4, 0x1.a40800d97879ep-3, 0x1.7c8aeecd7d061p-6, -0x1.6f23436f88781p-8,
        0x1.45bac3896fdc5p-5, 0x1.0b2e5af3d1509p-3, 0x1.24a4bb93c7adfp-2, -0x1.237e421fabef7p-6, -0x1.7a22f5607b206p-7, 0x1.0992b64bd10c7p-4,
        -0x1.050248150c569p-5, -0x1.e67a2458342f5p-7, -0x1.eeba254ece80fp-5, 0x1.8ed33120e9e16p-5, -0x1.5641c337f13dep-5, -0x1.8aeccf185248bp-4,
        0x1.274d5d630190bp-7, 0x1.37c16b80b1976p-6, -0x1.de0270ddf56e1p-4, -0x1.12e524b0bf3a4p-5, -0x1.1971ec9d9c57dp-2, -0x1.94ceb754d51efp-3,
        0x1.618a112def936p-6, 0x1.34e26feb9a654p-6, 0x1.f9dbe69d6f566p-6, -0x1.416cc34e9a131p-4, 0x1.91c3ec60a3416p-4, 0x1.7046a2f16add4p-3,
        0x1.1a1c0d3ffe43ep-6, 0x1.1c7b774d9c081p-3, 0x1.9ffd37867d18dp-5, 0x1.dfebf2d963d14p-4, 0x1.5c5352452626p-3, 0x1.1589283155c65p-2,
        0x1.c50f3ce684c59p-4, 0x1.0c43716b1022ep-3, -0x1.160441283d523p-3, -0x1.4f4393e47df17p-6, -0x1.843afe398b764p-3, -0x1.f4e85f0c8bad8p-7,
        -0x1.81d50dceff47ap-5, -0x1.ddfff03c43c5p-4, 0x1.52133995f5aa7p-5, 0x1.78778d1755302p-4, -0x1.5f3cf795585f8p-3, -0x1.382bf46ff2f6ep-6,
        -0x1.df03484db1546p-3, -0x1.be55aab163ddfp-5, 0x1.381ddd23bc8a6p-3, 0x1.a36d5e77c0f08p-4, 0x1.baa88520c81f9p-4, -0x1.09b4e44a3863dp-3,
        -0x1.419dc5ee1bf67p-4, -0x1.768165c082d71p-3, -0x1.6bcf25a718e5cp-4, -0x1.c5e6fb9e72c5dp-3, -0x1.ccad60f8f06ffp-5, -0x1.ada46673ff8d8p-3,
        -0x1.b09d2ba568e5p-5, 0x1.00387e58e9c4bp-3, -0x1.c4f274ed2a6edp-4, 0x1.bb5aa5547cf72p-4, -0x1.56b992a985ad2p-5, 0x1.7b5eef82e078cp-7,
        0x1.987da96880576p-4, 0x1.5490f3cf595d4p-3, -0x1.28897c9c72d0bp-6, 0x1.d8a678376e1bfp-4, 0x1.6f7f7a417dab5p-3, 0x1.0c386a1d8b9e7p-4,
        0x1.c5580ff8e13e4p-3, 0x1.f04e0af723e4fp-5, 0x1.4a03f9827a899p-4, 0x1.b2b366dd3f503p-6, -0x1.727452687a744p-3, -0x1.e4d7106d66f45p-8,
        -0x1.5f63fa359b76cp-5, 0x1.c37ea6e3989e9p-4, 0x1.b20932d2a5deap-9, -0x1.d0ff0130196d9p-4, -0x1.907c6f4ab4661p-3, 0x1.37d13f6cff247p-5,
        -0x1.13b3b957430afp-4, 0x1.2e5cf99b57b13p-3, 0x1.ce4d3476e2b42p-7, 0x1.8b8acec1bb6d5p-4, -0x1.2dfdda80c468dp-3, 0x1.a5ed3c3ddfc05p-5,
        0x1.2f3850453c4c2p-4, 0x1.3b9095592fbf6p-4, -0x1.f1b8ae2866835p-5, 0x1.4166acabac0ffp-3, -0x1.95e4b749702e5p-3, 0x1.563599131340ap-6,
        0x1.7ea2fee835028p-5, 0x1.6d198bac5a07p-3, -0x1.a8aa4f49163a6p-5, 0x1.64904d7aba67cp-3, 0x1.38decf7c6720ep-5, 0x1.ee41af1c13b6p-16,
        0x1.d498501ebc7aep-3, 0x1.8c7df68f89c7ap-3, 0x1.15d6f5ef25c92p-3, 0x1.4600f6c3faa22p-5, 0x1.4ca5c3c6a73f8p-3, -0x1.c9cd6b71698f1p-5,
        0x1.5a0fdf0b73029p-5, -0x1.4c47419bfa5c1p-5, 0x1.38e25af18fe44p-2, 0x1.09adb30368247p-5, -0x1.e3a098510dcf2p-8, 0x1.6b57f4fcccd6fp-4,
        -0x1.6a2608760fa7ap-3, 0x1.9deceb7ebe419p-5, 0x1.1b1089863924cp-3, 0x1.e53593f91756ap-3, -0x1.854658701368ap-5, 0x1.193e161a78bc7p-3,
        0x1.5c5e22b2d9805p-4, -0x1.fb6fd28d55238p-5, -0x1.68d4afbdad7adp-4, -0x1.41802dc4f0594p-3, 0x1.034519471b3b7p-3, 0x1.2c5f2ad3c822bp-4,
        -0x1.8827f9315cb2ap-4, 0x1.09df41b172da6p-4, -0x1.e865b767c5a7ap-4, -0x1.5a1a25c410984p-7, 0x1.18c6c0010fa96p-8, -0x1.0080f980efaafp-5,
        -0x1.576183f71959dp-3, -0x1.9753be16f0911p-5, -0x1.6003147457989p-5, -0x1.47e56676bda2p-2, -0x1.6ff5e17e37d12p-5, -0x1.6371ec88bdd85p-4,
        -0x1.38d6a7a568e67p-4, -0x1.7b05d341066d5p-4, -0x1.404918794cb61p-3, -0x1.015d8ef0ca80fp-2, 0x1.911204c13adfdp-6, -0x1.a696edc412d43p-6,
        0x1.26796e5348299p-7, -0x1.3cfd684fb3a8p-17, 0x1.cb452a9dfa43ep-3, 0x1.0b0a7c6e73ffep-3, 0x1.0f868d336fc3bp-3, 0x1.2b8c37d21ba2p-3,
        -0x1.f63189f0a359cp-4, 0x1.7b7363d9a0045p-3, -0x1.d926f9350e804p-3, 0x1.bea688d827afap-4, -0x1.45533ea561ae1p-3, 0x1.cd7e75589244fp-4,
        -0x1.1ee39597f19fep-6, -0x1.210b99119b6a4p-5, -0x1.c46885b62e467p-5, -0x1.c831fedf83e06p-4, -0x1.30bba921af76dp-5, -0x1.c2779a9fb6732p-7,
        0x1.59a1495e30c8bp-8, 0x1.d78fc1b660c62p-4, 0x1.b13bb7f5663cep-5, 0x1.2ae1b8483c4bp-7, -0x1.834e27750a477p-4, 0x1.9b21de6f60116p-4,
        0x1.a8a34feb00c4ep-4, 0x1.b2a2d6aa7c1e6p-5, -0x1.0f3aad441a1a1p-2, 0x1.2da39d90937cap-6, 0x1.560ef9ca76a53p-4, 0x1.7bcfa50197172p-3,
        -0x1.f4ca8d81acc95p-9, -0x1.af113cbd79e8cp-9, 0x1.288401ad6acbap-4, 0x1.a560bafdb899ap-7, 0x1.116122ffd0ba9p-4, -0x1.34d2ee371d864p-5,
        -0x1.d0d636bb75aa7p-4, 0x1.1d6629ec307adp-5, 0x1.777fd3bbe3cb7p-7, 0x1.26264aababa4fp-5, -0x1.488dd3b6a57ddp-3, -0x1.436020ebae5cep-4,
        0x1.6a4fb6b1a7d2p-3, 0x1.edbd6af1ed025p-6, 0x1.5f81b50616a03p-5, 0x1.13ac926931a73p-6, -0x1.3851cc89d43cap-4, -0x1.4ac4793524d99p-4,
        -0x1.7d62ffafd5994p-6, -0x1.cc75b84dd65b9p-7, -0x1.80f4b4af40117p-4, -0x1.51043ebeee4a1p-5, 0x1.e4c42f13fdfd2p-6, 0x1.23b18d1285be5p-6,
        -0x1.8762f97693385p-5, 0x1.2f4277b3911aap-3, 0x1.595196b4a4a23p-3, -0x1.b9f75c18f023ep-4, 0x1.0efe4583115f4p-3, -0x1.29185952baf3cp-4,
        0x1.a07c2ffd1677cp-5, 0x1.dbbafb7bee37bp-4, -0x1.097964d8e6963p-4, 0x1.f70f6b389c91ep-6, -0x1.200f3ae57f914p-4, 0x1.dba14067f771ep-4,
        -0x1.24b3c1ddffff1p-5, -0x1.d6cf04ed761abp-3, -0x1.b2b1cbacc6f67p-5, -0x1.6dcba6c542306p-4, -0x1.1aa3af4ac2039p-6, 0x1.1c6bbce4c106bp-4,
        -0x1.070750763ce82p-3, -0x1.81dc17dee36cbp-4, -0x1.2e295ea8c9f5fp-3, 0x1.0323a6946a97p-2, -0x1.b32947b036eb3p-9, -0x1.04f8e6873f581p-9,
        0x1.8c304c05bd4eap-3, 0x1.da90f39eccdfbp-10, 0x1.dc904b88aac7dp-6, -0x1.de60e0b31987p-4, 0x1.942280fd4d809p-3, 0x1.89bf66faf1306p-5,
        0x1.4bb06db0dd656p-4, -0x1.fcabe1e2a9b33p-5, -0x1.b67d3a85e7873p-4, -0x1.4484c0cc885e8p-3, 0x1.801d9cb555349p-4, -0x1.fddcd67836d8ap-4,
        -0x1.47f629382f246p-3, 0x1.e520aeb26c719p-3, -0x1.6d942820c38ebp-3, 0x1.f29548934264p-5, 0x1.22ff0efb0d95ep-3, 0x1.b54deb30268ecp-6,
        -0x1.5fa07270ba0fp-11, -0x1.a532f66341b49p-3, -0x1.2ddab47a572d5p-7, -0x1.00a3c7f967d6bp-4, 0x1.01ba8c21074ecp-3, 0x1.d901330769f3p-4,
        0x1.786701f8253c8p-5, -0x1.954bd9ad38edap-5, -0x1.4481bc0bc6d3dp-3, -0x1.6a6264d0acce4p-4, 0x1.4abbaf3c7685dp-6, 0x1.68d859ef4c741p-3,
        -0x1.8662da8785b48p-3, -0x1.772daa2a355dfp-8, 0x1.82c7e0994a8d8p-3, -0x1.76b8519835681p-4, 0x1.15a71610d2513p-3, -0x1.bb797f012d24bp-7,
        -0x1.c745acf4fb4a7p-5, 0x1.531534debe694p-4, -0x1.4188a02bc0cd8p-4, -0x1.7b71fb3aac15ap-6, 0x1.e36b2bc8a013bp-5, -0x1.1b37acdabf497p-3,
        0x1.1b94daf5e8646p-2, -0x1.5d33ceda19c98p-3, 0x1.7bf0329944ca8p-4, 0x1.abb74a76d6c4dp-4, -0x1.d98305633d7ebp-4, 0x1.c41f53e00ca52p-3,
        -0x1.110ccd27bec09p-4, -0x1.32009b214d9bap-3, 0x1.1e7894717d21ep-6, -0x1.667c34103e806p-5, 0x1.72f43c02ba65p-4, -0x1.058ac4536d534p-2,
        -0x1.3f5fc35d6ab7ap-4, -0x1.21a5f0fc28d67p-6, -0x1.c7fec2d89a5a9p-6, 0x1.c51d87452cafap-6, 0x1.09f337536b766p-3, 0x1.211dae365f8dp-3,
        -0x1.5d073a19699c6p-8, -0x1.85ef7c1ae477fp-4, -0x1.049365aa9d7d6p-2, -0x1.c50f09579978bp-4, 0x1.6bb3985bf714bp-3, 0x1.c4403dbe698e3p-9,
        -0x1.6a6c844389033p-4, -0x1.b0f912939613ep-5, 0x1.a8fde169c423ep-4, 0x1.3c25232522543p-3, -0x1.b3cf50db1ccaap-4, 0x1.fd8cf25b6ecc5p-4,
        0x1.774e7a1e94e7ap-4, -0x1.0b9217b6fdcabp-4, 0x1.5b699dbdbd30fp-4, 0x1.16413bf3959c4p-3, 0x1.3e1c10b1b3f13p-3, 0x1.2164b9002f313p-3,
        -0x1.aa749c95590b1p-6, 0x1.0a29e02bba1cep-4, -0x1.9aa3ff801dd57p-5, 0x1.4a1fe18d03471p-4, 0x1.428efe2950437p-4, -0x1.606b68e643aa7p-4,
        -0x1.47dd54014f7cap-7, -0x1.53e4752ff4eacp-4, -0x1.1db86515e2dc2p-4, -0x1.d5eb05ff77a29p-4, -0x1.d1a667bf7ff9p-4, -0x1.48d8cac1977c3p-4,
        -0x1.319bd828452dcp-3, 0x1.1c9bcdad8c376p-5, 0x1.5409dc7e806dap-3, -0x1.33eec290b4c8fp-3, -0x1.344dee7f64761p-3, -0x1.11d78c515fb77p-4,
        -0x1.51253a2c62aa9p-3, 0x1.b280134fecf63p-4, 0x1.60a9fa0ee0d93p-4, -0x1.806ff1bf3bfccp-10, -0x1.8adb4c7c5a495p-4, -0x1.50bb1b463da76p-8,
        0x1.8e989b21569a2p-5, 0x1.3d7d8a74b4b2bp-5, -0x1.5d9d7588b889ap-3, -0x1.ae5585a9409eep-4, -0x1.d56ba1233009bp-4, -0x1.22ab6d3d9297bp-4,
        -0x1.c7f16e8114eaep-9, -0x1.c4749421491dep-7, -0x1.2040c01eec613p-3, 0x1.eea575f3e70bdp-5, 0x1.7cfe05312983fp-8, -0x1.608f08375c59bp-5,
        -0x1.95f4ee4f3bd7fp-4, -0x1.52ee704c32844p-4, -0x1.22ee53f65c06ap-4, -0x1.ae410ee00e818p-5, -0x1.20fff2f6d0d01p-6, -0x1.65ed932022e44p-6,
        0x1.8315e04b2377ep-4, 0x1.c96a155524fb3p-5, 0x1.122b5cdcd481ep-3, 0x1.88305ac6f2393p-5, 0x1.0ba755db7ee17p-7, -0x1.4da75f9402cc5p-4,
        0x1.19d14a152ddf3p-3, -0x1.697bf174ea8f8p-3, 0x1.3187fce3ce63fp-4, 0x1.e9709cfb3a0c9p-4, 0x1.bcfd96ea8ec62p-5, -0x1.e94cf4d3f9cdp-9,
        -0x1.6b3d00a841154p-3, -0x1.9e70c7e7ec7a8p-4, -0x1.5a5408c30da4fp-3, 0x1.15442c48da167p-4, 0x1.5f0214e21af6cp-6, -0x1.05bb68b40cb9fp-4,
        -0x1.48099d1ded40fp-4, 0x1.49de617400452p-9, -0x1.36b9352838d78p-5, 0x1.334ac0f7dae5fp-3, 0x1.f1ae6a231e41cp-6, 0x1.c10ade6aafeacp-5,
        -0x1.47f32475807e3p-4, 0x1.6efa56b080629p-3, -0x1.2cc1d2266bdbcp-3, -0x1.7f8ca6e4dab5bp-6, 0x1.9f847ada8165cp-6, -0x1.fc1d161b650a3p-6,
        -0x1.67fccd8cce08fp-3, 0x1.481b55a13be91p-5, -0x1.27336d7243557p-4, -0x1.1d44d84bc2f1p-3, -0x1.4054914a5abb6p-4, 0x1.8afa6b4f8563cp-5,
        -0x1.d8857dfb1926fp-3, 0x1.45f25a07c8403p-5, -0x1.3679dd782d8efp-3, 0x1.d6bce9a9a2d9dp-4, -0x1.3cb52bfdbb1cap-4, -0x1.8064c4b4d872fp-4,
        -0x1.0f7e16d11e4a5p-3, 0x1.154f97b427e27p-4, -0x1.1f44fe5bb37cp-3, 0x1.d144bbd0fef2fp-3, 0x1.16b651e3a9e97p-4, -0x1.9ceca07b2204cp-5,
        0x1.08481eda3b7dfp-5, 0x1.757c95bf0c111p-6, 0x1.db5af32f1340dp-4, -0x1.8c9039b61a42cp-5, -0x1.b139b8503b802p-7, -0x1.29877dc210836p-5,
        -0x1.3498a33681cb5p-3, -0x1.6c180454d9c03p-4, -0x1.8f9a689c9e2bdp-6, 0x1.f22421d52fdacp-7, -0x1.0a33137c3d8d3p-4, -0x1.0066af5b753ccp-3,
        -0x1.1db8d0a24e8abp-3, -0x1.0003b9926b9e2p-4, 0x1.96db44500467bp-5, 0x1.b841031a4a5bap-2, 0x1.fbc885a9d622cp-5, 0x1.34e8afca3be24p-5,
        -0x1.fc40638005916p-5, 0x1.c5ee8c5d28843p-5, 0x1.464456df4ab56p-4, 0x1.43cd9080b8739p-6, -0x1.721a09952b484p-4, 0x1.985f3816155a6p-4,
        -0x1.07ce6bb9c1b68p-7, -0x1.abbcc60901e1p-3, -0x1.933b917b7e699p-4, 0x1.82a132ab3ba84p-5, -0x1.118529cd90d87p-2, 0x1.21d9c3cef441dp-5,
        -0x1.af2adf5eda3b7p-5, -0x1.6c0853b4789f5p-3, 0x1.74cb8f5728c7bp-4, -0x1.2aa03d8f5d33dp-4, -0x1.adf99d78e9f66p-3, 0x1.529112ec8fb26p-6,
        0x1.ce194a950a731p-5, 0x1.29885564b94f2p-4, 0x1.0236c31adce17p-3, 0x1.7a2d039488bf4p-3, -0x1.eae33e4c5a019p-8, 0x1.8b0d9c47b73d8p-3,
        -0x1.8a0b59d8dd425p-5, 0x1.9b241db84bbeep-6, 0x1.c605397f5e868p-7, 0x1.579431d0af15ep-5, 0x1.b258410007986p-4, -0x1.ade1ddcc110fcp-4,
        -0x1.38bb62cc74b6p-4, 0x1.ec8b6438848eap-6, -0x1.e35bdbb3f38c7p-3, -0x1.aa0afc6e6c879p-4, -0x1.2ad3f7bddb74ep-5, -0x1.1ac65e546919ep-4,
        -0x1.26f23c857453dp-2, 0x1.c02bd79d40c3bp-5, -0x1.d868fd22e774cp-4, 0x1.d5c43c7a9d881p-3, 0x1.a9d3dcc08fap-4, -0x1.884c68d2cac78p-4,
        0x1.f0413e2eb84b1p-5, 0x1.dbda129a3b5abp-4, -0x1.286b28558fce6p-3, -0x1.b964ae99986edp-3, -0x1.9af398dd18f45p-4, 0x1.0b12aaae8cef9p-2,
        -0x1.d57b10b734ef8p-6, 0x1.e8a1dc33f90f8p-9, -0x1.4359df2eef754p-5, 0x1.be6532594d46ap-3, -0x1.e7bc1ed2533e1p-3, 0x1.1e5572769c1f9p-4,
        0x1.762c2f90ee5dep-3, -0x1.f3e5d6e5525e6p-6, 0x1.3433aaa3c43f1p-7, 0x1.10dd95a56e3b5p-4, -0x1.041bf9349c38bp-4, -0x1.e3c5e02682771p-4,
        0x1.2b66c4c3cf212p-3, 0x1.d0cc7dbc35968p-4, -0x1.198f7f349f712p-4, -0x1.0b7cb947e918ap-7, -0x1.1047c625e5e36p-3, 0x1.d6c5f7b8801dbp-7,
        0x1.09a724f424da7p-3, -0x1.ef725c055e5f9p-4, -0x1.4abb54a7609fap-4, 0x1.42e8ae7399aa7p-3, -0x1.6723c53690b15p-2, -0x1.44f86ed492f51p-3,
        0x1.da8c70d5f9072p-4, 0x1.7c038b64cc949p-3, 0x1.76165ff421bebp-3, -0x1.b543190c453e9p-5, 0x1.2d10960e3f9b7p-3, -0x1.e71a8b06ab72cp-4,
        -0x1.f2e0f631036d2p-7, 0x1.4838ed00ae574p-4, 0x1.598ad0a2b4adbp-3, -0x1.c239715d7db2dp-3, -0x1.887b966da5c35p-3, 0x1.90beff2edc87ep-3,
        -0x1.b47fe1d8bcf48p-3, -0x1.1965670c3ec7ep-4, -0x1.3646f3e08acb5p-3, 0x1.cebdc3298ab92p-4, -0x1.3ffa6fffe8936p-3, -0x1.65b570a445802p-3,
        -0x1.c3ca948e75eddp-5, -0x1.92ce78b2c4295p-3, -0x1.bd976947d85ep-2, -0x1.92365c7ce5e62p-4, 0x1.a7d4b904c9854p-3, -0x1.71b18f751f049p-5,
        0x1.ea6586a182ce5p-8, 0x1.d931104e00703p-4, 0x1.558639f25e0cbp-3, 0x1.497e83a745047p-5, 0x1.41dd63b482434p-3, 0x1.a0e93a7a0cd5bp-5,
        -0x1.2f21fabf62d88p-3, -0x1.406518b47ed01p-4, 0x1.a99579601aae6p-4, 0x1.434073fb313b2p-3, 0x1.3c53ec7cbe264p-3, 0x1.51c04bfa2df47p-3,
        0x1.6b688f1ecd94p-6, -0x1.d8b1293d09295p-5, 0x1.a77db9857ec52p-3, -0x1.c64261cda62fap-7, 0x1.9e4092193218dp-4, 0x1.4fb455c371ca9p-3,
        -0x1.98deab6b62f6ap-3, 0x1.fb032a518de73p-4, -0x1.74ab4f216d109p-3, -0x1.1a6e5abd81f98p-5, 0x1.8a949c53231e8p-3, -0x1.7a1905eccc8b4p-5,
        -0x1.22f439ee2962dp-4, -0x1.4d6edebba8fd2p-4, -0x1.2dcf72a86afa4p-3, 0x1.a36421c428c55p-5, -0x1.6dddf6ca82f0cp-4, 0x1.4f6a9a5d42c9ep-6,
        0x1.18c773ddbb46bp-4, -0x1.900e83d9e8926p-4, 0x1.1dae72e42966dp-3, 0x1.e05f910086d8cp-3, 0x1.00b439869b5d4p-4, 0x1.2baccabf2bceep-3,
        0x1.4e1317619c3b5p-3, -0x1.f30da6f3c244fp-5, -0x1.9d79e21fabdc1p-6, 0x1.3c87ded570893p-3, -0x1.859fa908dfdd8p-5, 0x1.e432fe5ff576fp-4,
        -0x1.45d25e4aedef5p-6, -0x1.c937a38ebfefep-9, 0x1.2f7b46831a108p-5, -0x1.275ff6d0974p-2, -0x1.22d4fa0a3713fp-4, -0x1.777ef086dddd1p-3,
        -0x1.44ca4db564afbp-4, 0x1.ee1d151c67bc1p-4, 0x1.8bda9130cc53p-7, 0x1.c355ce592bf75p-4, 0x1.8b1a910c4a419p-3, 0x1.9544c3e8abe2fp-3,
        0x1.96235b9fc69e1p-3, -0x1.050a5ac94e93dp-5, -0x1.4525654965fd1p-4, 0x1.519c8b4ae33c1p-6, 0x1.ba06f1e738d0ep-7, 0x1.016da459616c9p-2,
        0x1.6178e9fbb7944p-3, 0x1.25b6291b7f3p-8, -0x1.5bac5db28719ep-4, 0x1.1ae2eb05ef86ap-4, 0x1.0becfb0cc4ecfp-4, 0x1.e26a0c5898fdcp-3,
        0x1.ab30c643fd8d3p-7, -0x1.8a538674432dbp-4, -0x1.d781a6540aa83p-5, -0x1.5afc02a320ce1p-4, -0x1.50afb589355e8p-7, -0x1.c85ba57d6b4aap-5,
        -0x1.e53c195e0607ap-5, -0x1.23357dd8318e2p-4, 0x1.0df30fb413eafp-4, 0x1.0c322b52e98bdp-5, 0x1.fa7110b9b5ddfp-3, 0x1.844db561924b1p-3,
        0x1.1079ed41b5c91p-4, 0x1.73474bc735594p-2, 0x1.1c4cffb400286p-4, 0x1.6051804be22a3p-3, 0x1.54045befea8ffp-3, -0x1.3e882440be533p-4,
        0x1.4cec856a3a46ap-4, -0x1.67d328cc276f5p-5, 0x1.8f9715bbc8aa5p-3, 0x1.db1a4277d37b6p-6, 0x1.14632a64454fap-5, 0x1.b99cfb0215a43p-3,
        -0x1.5f23dd520b243p-4, -0x1.918a7fda39d1p-6, -0x1.82852e4f445b7p-3, 0x1.fe6fd415b6f35p-3, -0x1.4fbfdb8e7a81cp-6, 0x1.ede90ce942ca1p-3,
        -0x1.89f5c32eda515p-4, 0x1.c567e0cd5b64cp-5, 0x1.5981434c7df99p-7, -0x1.9438636987276p-3, 0x1.37ae22b658559p-4, 0x1.bfc2cb0280023p-3,
        0x1.4cc9c768a2d57p-3, 0x1.1398109a06446p-5, 0x1.01e7c52ae09d3p-5, 0x1.7423b27439826p-4, -0x1.4f130045dc814p-3, 0x1.7f5a4b7f22299p-4,
        0x1.a5c069442449p-14, 0x1.2a11b4f2c0833p-4, -0x1.abc151ac181ecp-4, -0x1.7a79a2e0b6d32p-4, -0x1.8b63cf024bd4ap-4, 0x1.063b8a3a16f24p-4,
        0x1.010c959b1f89ap-2, -0x1.637b569b92d2cp-4, 0x1.7143657a7d22ep-5, -0x1.19949e8a76986p-7, 0x1.769247a348d28p-5, -0x1.52c9da69a7e2cp-3,
        0x1.2bbd4676d88dfp-4, -0x1.0eda26e712b5cp-5, -0x1.d8109e472e185p-4, -0x1.9880d4ea04c94p-3, 0x1.babdd7f1d7bc8p-4, -0x1.7e3d7cd5dc0c5p-3,
        -0x1.395388cd14839p-2, 0x1.bb63d568baf1ap-6, -0x1.bf8747f904b84p-3, 0x1.a76454cef08eap-3, 0x1.deaa97e627322p-5, 0x1.42819be31ad83p-5,
        0x1.5bf855627d5b9p-4, 0x1.4b35c46c3b1eap-3, 0x1.433500c1d630cp-2, 0x1.0d61838e832dfp-2, 0x1.8422c9039a54dp-3, -0x1.22f536132fb06p-5,
        0x1.0c14e4a46e5c7p-9, -0x1.0d2334959a98ep-3, 0x1.82a7c0de7aabfp-4, 0x1.64bbef71fd445p-4, 0x1.776a7f5dd48ap-5, -0x1.a5fcf2b34302bp-3,
        -0x1.0734bb9deb7e6p-3, 0x1.3d3a314eb0f1cp-8, -0x1.771a3cffbdaebp-12, 0x1.a635b631b812bp-5, 0x1.489ef07da223cp-6, -0x1.157c754efb58p-3,
        -0x1.511b4bf87a1e1p-3, -0x1.9e91022c8eaa4p-3, -0x1.936c297ed70cp-3, -0x1.27d94421fab9bp-4, -0x1.559b2b337ece4p-6, 0x1.80ea7d1b4720ep-7,
        -0x1.54f1606e07666p-8, 0x1.5ad0627a23995p-4, 0x1.b1cf192d732adp-6, -0x1.a9735bde65addp-6, -0x1.95824ec611546p-5, -0x1.6fdea111ac8a6p-5,
        0x1.0a56f10e51f09p-6, 0x1.32b1ab5a6e36ap-4, -0x1.9f87e7479ff68p-3, 0x1.46da7fbf97352p-6, 0x1.d390af9f7f619p-6, -0x1.791310bb2c8e9p-3,
        0x1.85b791315b2b6p-5, 0x1.1ad2e55dd0d4fp-8, 0x1.68865600db999p-5, 0x1.be1a5b16841bfp-4, -0x1.72bfbb830882fp-4, -0x1.3d5a90d94b7dcp-3,
        0x1.6c7859877e216p-5, -0x1.b3cd0fef1623ap-3, 0x1.55ddacacd0f2p-3, -0x1.0bb50f7e0560cp-6, -0x1.673078920db87p-5, -0x1.bac7351c3361dp-4,
        -0x1.58ea62cd9f4aap-3, -0x1.cd91585f532dap-3, -0x1.c442feeabf36p-3, 0x1.f5c3b9976a137p-5, -0x1.990163b8ab3b5p-4, -0x1.16aa81f9922f9p-3,
        0x1.14d4d1a7ad658p-3, -0x1.8cf8233cec423p-3, -0x1.7d4bec5b25d27p-4, 0x1.9dc72fc111765p-3, -0x1.13db9e87af16bp-5, 0x1.669bf7a4ce437p-4,
        -0x1.20ccd23eeb9e1p-4, -0x1.a99ea7c144b23p-4, 0x1.b0803f051d5fbp-4, 0x1.f8c8e747a5b56p-5, 0x1.79b9d3259bbe5p-4, -0x1.0004c3d86c18p-2,
        -0x1.dd85fbb9001aep-3, 0x1.f30e784b0c1f8p-4, 0x1.3c4c7bed146a1p-4, -0x1.adfcb0c9fd35bp-4, -0x1.071608ff5ef4p-3, -0x1.3a7f4aa5eea5bp-3,
        0x1.6f782deaf2015p-10, -0x1.a1445dcee5ae9p-3, -0x1.042085bd3a01ap-4, -0x1.0495a06d82b8ap-3, 0x1.1ac19021af0d1p-4, -0x1.89055d196ad9dp-6,
        -0x1.acb269bf7ce6dp-3, 0x1.45cdda8d4ce86p-5, -0x1.ba25b8b4dba06p-4, -0x1.d98ed6c0277f1p-4, -0x1.5e4e7eaebb247p-3, 0x1.456cea83df6aep-4,
        0x1.dfcce60092b1bp-11, 0x1.18714843da422p-3, 0x1.6f23f0d6909a7p-4, -0x1.8dbdafae957d7p-4, -0x1.b056c941526bp-5, -0x1.d54ea274b842ep-3,
        0x1.c8a57032b9bc5p-4, 0x1.3d3968f5857b5p-3, 0x1.1600e5a6c6f4p-3, -0x1.b493fa6667ap-11, 0x1.5db2a77c0a731p-4, 0x1.0776978f76f7p-3,
        -0x1.fd48b1cfb6cbcp-3, 0x1.2e03185b9eb0cp-3, 0x1.312dc927bba3dp-4, -0x1.16674a3c35f33p-3, 0x1.1916f4940a93ep-4, -0x1.a02ecab6cfcc7p-3,
        0x1.3ddd1d3046052p-3, 0x1.973b22e793079p-4, -0x1.9c148ea19dac1p-3, 0x1.29cbb61c3a42p-7, 0x1.1674c430e6b5p-4, -0x1.45feb6e560396p-9,
        0x1.55174d550a0d2p-2, -0x1.f6c3894c0948p-4, 0x1.8a7eb90b99013p-4, -0x1.1e7ac967d6755p-3, -0x1.40acb69c3c6a8p-4, -0x1.91277c3d860d9p-5,
        0x1.a81c36d33f392p-4, 0x1.1b0259a55e488p-9, -0x1.8d05915a495cap-7, -0x1.d5ed4367d1b11p-6, -0x1.5b9de78179b4p-5, 0x1.6d71da0fc9f32p-4,
        0x1.0ae51d32d0d3cp-3, 0x1.d6576069fb2a6p-4, 0x1.30d4c17a67852p-3, 0x1.73cbda8b5dd57p-3, 0x1.aee7798b6dd3p-4, -0x1.34e1926c017f2p-4,
        0x1.d4ff0da3e2347p-3, -0x1.7e7525d152729p-3, 0x1.a4e9d87bfd632p-7, 0x1.cf9e9f265ee43p-6, -0x1.902335f46621bp-5, -0x1.4318abf4f8226p-4,
        -0x1.608528f1185dp-7, -0x1.444e9f38ba442p-10, -0x1.4531ea61cd9d1p-5, -0x1.5ad37cd716154p-7, 0x1.46647abd56a36p-2, 0x1.5956f78c74a01p-6,
        -0x1.28dab9af9b7c8p-3, -0x1.f5dec0e94fc0ap-4, -0x1.997f8b2e08af5p-5, 0x1.4c91abbc15b09p-3, 0x1.d207f105a0409p-4, -0x1.4ce76005ed712p-3,
        0x1.543d77b460837p-3, 0x1.b630ca9e75d1fp-9, 0x1.04e50cf645fefp-5, 0x1.813ae3e9e67a4p-6, 0x1.621544e7f8244p-2, -0x1.4726c5ba56374p-5,
        -0x1.c8ca8fadea19dp-6, -0x1.3548579e9fbf8p-5, 0x1.381d047f54659p-6, 0x1.0db25166cc00cp-5, 0x1.18052fdb75584p-3, 0x1.f792a21762cc7p-4,
        -0x1.ab0e2784b2475p-3, 0x1.39cd45d323b41p-3, -0x1.eaf2212cbc941p-4, -0x1.d99a83c807736p-4, 0x1.6686ea2865fcap-5, 0x1.49e7d19ce1997p-4,
        -0x1.129f360293fd9p-6, 0x1.ee59ba96e208cp-4, -0x1.f3d67a5f1a748p-8, -0x1.dd20ff4d16539p-4, -0x1.a2aab8752aa91p-4, -0x1.87318b309a62p-6,
        -0x1.663d1daaa1addp-2, -0x1.3fe4c8ad5f22bp-3, -0x1.4d9ca9ca8f1b5p-3, 0x1.fa937ccf10827p-3, 0x1.7eaf1b473f855p-6, 0x1.7a362efb76bf2p-3,
        -0x1.8b4b779e2c9d2p-2, 0x1.52fcab3d1e154p-3, -0x1.120431b752a1p-2, 0x1.91aaed837ff8ep-4, -0x1.92a42a3e5881bp-4, -0x1.f577ca9e0b07bp-4,
        0x1.db73bab9177ep-6, 0x1.209ff9b1850a1p-4, -0x1.1fcf04a23789fp-5, -0x1.bf35b2e2586bap-9, -0x1.1d78521ac3fe6p-3, -0x1.9358ca281d41fp-5,
        -0x1.eb4edd0199533p-3, -0x1.bc44294e2c141p-3, 0x1.11c4bd217bf53p-2, 0x1.2bc20b73ec8bep-3, 0x1.a2f896c309615p-4, 0x1.02ddbb217dc71p-4,
        0x1.50106e74637p-6, -0x1.8acceda19ffebp-6, 0x1.96a7531abde36p-7, 0x1.933a2643f2fb6p-3, -0x1.ba6c3280a6778p-3, 0x1.38161c954d268p-5,
        0x1.2b6813b040cefp-3, 0x1.d6a94d155a1bap-4, 0x1.154ada9fa1f2ep-2, 0x1.f9ad37e6845e1p-6, -0x1.862332b0c98e7p-3, -0x1.cf2baca2a5bd9p-3,
        -0x1.7c17930604d2ap-2, -0x1.3d394c1770aedp-5, -0x1.038c72f91a4d1p-2, 0x1.263d5c7f4baap-6, 0x1.72481fc5201a1p-3, 0x1.130e500530939p-4,
        0x1.b7ed151a664e2p-8, 0x1.9f14fc61b864ap-9, -0x1.7c0f3308307eep-7, -0x1.7a6e75c957264p-3, -0x1.dc386a06c7966p-3, 0x1.8632eb4402898p-5,
        -0x1.dd4e55eafc655p-6, 0x1.dc05557827dc4p-7, 0x1.8b66fb51476adp-4, 0x1.008c5c7776df4p-8, 0x1.3c78a7b48d0b5p-3, -0x1.5150e90b44b32p-2,
        0x1.77c66b2ba7facp-3, 0x1.681cfc731f1aap-7, -0x1.6a385b9db305fp-5, 0x1.57a7567d441a2p-9, 0x1.1fa396040137ap-2, -0x1.88b59dd64edbcp-4,
        -0x1.5df6054d3e897p-6, 0x1.42bf4f02c6a84p-5, 0x1.a706fd027d508p-4, -0x1.5e52dbf6e68f3p-5, -0x1.5a71a3ccfaaa1p-6, -0x1.40af4d7672c3dp-2,
        0x1.1923e04730e71p-4, -0x1.255d5b2bbebp-4, -0x1.505388472579bp-5, -0x1.5761aa9dbfb41p-3, -0x1.81e1500dfb444p-3, -0x1.11a7b26731ecep-6,
        0x1.e8d4304016006p-3, -0x1.89767a6e27a3ap-5, -0x1.a9472e7c33bcfp-4, -0x1.c349b566c07fbp-3, 0x1.7534192bfafdcp-6, -0x1.0aa4cb1ce233bp-4,
        0x1.43052a85cc4f8p-4, 0x1.65301c00267d9p-5, 0x1.addd6c38b7a31p-5, 0x1.d334fee8efb11p-4, 0x1.268ff345afdabp-3, 0x1.67ff3dc76abebp-3,
        0x1.6475aff70c85p-7, -0x1.0d95dbc7d03c3p-2, 0x1.dbca2dd094e86p-9, -0x1.21ac932fca089p-3, 0x1.c3d0d5598f801p-3, -0x1.926de219f3d4cp-4,
        0x1.30033a2311fadp-5, -0x1.3ceedc98007bcp-3, -0x1.149be3aa81c5dp-6, 0x1.3c61e4dd2652fp-5, 0x1.6ffbc4d3e89cdp-3, 0x1.1a31f5a431d86p-3,
        -0x1.291d61d22c2fp-4, -0x1.6e9a67af684fep-3, -0x1.214e541e7da66p-5, 0x1.66a1359b35cacp-3, 0x1.de56e1d80506bp-6, 0x1.072e693f7f6cap-2,
        -0x1.1acd027cd5d22p-4, -0x1.9321b1b0eb78bp-3, -0x1.fccca77d5f62bp-5, 0x1.295fade90c62cp-2, 0x1.3044161642902p-2, 0x1.3f461321f6a7p-9,
        0x1.c0c56f0914a8ep-4, 0x1.7e82b8ef5f852p-4, -0x1.c540027cce431p-5, -0x1.817badcdf3593p-5, 0x1.4466b2e19bb98p-7, -0x1.c5dd6f1f39c62p-3,
        -0x1.a3b0a0321e8a3p-5, 0x1.04330c51d7d62p-4, 0x1.ca33e167d0968p-4, -0x1.d79dddd04792p-3, -0x1.0af60139ad3dbp-3, -0x1.8bac0ddd6ecep-4,
        0x1.958b71b74bcdp-4, 0x1.aed5dea74c11cp-4, -0x1.bf91abadeec11p-7, 0x1.ba578ca5ad82fp-8, -0x1.8fc453812136ap-2, -0x1.6568376202528p-5,
        0x1.8d8d034964a67p-3, 0x1.354b4d7f31d0cp-4, 0x1.ce36249c24b5ap-4, -0x1.05a350e5b0e9ep-3, -0x1.ac755632bd1b4p-9, 0x1.69888c6b5154dp-4,
        0x1.c438e0b5540bp-6, -0x1.41c8c65ee378p-20, 0x1.6f18544ac6d7fp-4, -0x1.09e7a2da6de82p-2, -0x1.dff7bb0adc82fp-5, -0x1.7d8a526b8eedbp-4,
        -0x1.2a2d342d7b083p-3, 0x1.1ce8082df3ce5p-6, 0x1.f874078c7a493p-6, -0x1.d3d17e53e8776p-4, 0x1.ef4ca775b6d54p-4, -0x1.44ba0af689ea5p-3,
        -0x1.b1e97f976f0b4p-7, 0x1.dc63f3da5bcbep-4, 0x1.d191ef04505e2p-4, -0x1.f4cbf8fac8a2dp-4, 0x1.043eeaf7cbb81p-5, 0x1.61c5bebc7547ep-6,
        -0x1.6d1079dc669aap-6, 0x1.2391a3a7ed6c3p-8, -0x1.269e2fd13c5b2p-3, -0x1.65dfcee17589dp-3, -0x1.8f69a6201bc1bp-4, 0x1.31204d4ba5041p-4,
        -0x1.a004dafe4a2e1p-4, 0x1.6da61432bb544p-4, -0x1.3dd36094c22a4p-6, 0x1.8c0c08b504d5ep-4, 0x1.360139f77b348p-3, 0x1.a7bcdaf89a24cp-5,
        -0x1.461c3f875840fp-3, 0x1.16387fccc7129p-2, 0x1.15668023e217dp-4, 0x1.d62a4756d6388p-4, 0x1.e3c3298736386p-4, 0x1.05f5e94955d6p-4,
        -0x1.2b1edecafa0d2p-4, 0x1.3e08439616357p-4, 0x1.042ca9ab9c19fp-4, 0x1.4e43d03ea862fp-7, 0x1.65a830ca6bed8p-7, -0x1.c9eda81f02466p-3,
        -0x1.6972d790b7a45p-6, -0x1.2033be514dbc9p-5, -0x1.eadf7a0757be3p-4, 0x1.28aa713d39245p-8, 0x1.4f1288435133ep-2, 0x1.1322860ee6ab6p-3,
        -0x1.c55b01df043dp-6, 0x1.ce99a3e32e8c1p-5, 0x1.4a167757710e7p-6, 0x1.4f1f8ef6f8884p-2, -0x1.469fa6757c5c2p-5, 0x1.91745d8ebec86p-5,
        0x1.83386c109d767p-5, -0x1.328519f445ca8p-3, -0x1.8f6b685a5c177p-4, 0x1.86b1e82980be2p-4, -0x1.50215c5a4f80bp-5, -0x1.53f5897655a98p-4,
        0x1.f510afad94d61p-4, 0x1.1cafc27521947p-7, 0x1.1b67a5cf5bfd2p-5, -0x1.e901b16cd9773p-4, 0x1.fc937d780fee9p-4, -0x1.ec3d71c5ba23fp-5,
        0x1.2af804886c561p-9, 0x1.7725d3740c688p-6, 0x1.8b4e180265a34p-5, 0x1.6d07702f4fa5cp-5, -0x1.44f52e0b1c90fp-3, -0x1.6aef2ee78eb5ep-6,
        0x1.23af88aa42c3bp-5, -0x1.cf840a643b37p-3, -0x1.7f3e80d1f0667p-5, -0x1.063c36ab12e05p-3, -0x1.0950325f830d7p-3, 0x1.2e3b0205d27adp-3,
        -0x1.a4c860d124123p-6, -0x1.ff300aad12d6ep-3, -0x1.0f67cc4f50fa1p-4, -0x1.fdcf3a62f9211p-6, -0x1.eadec227b9313p-5, -0x1.75ef55bbb2f92p-3,
        0x1.1900b95599325p-3, -0x1.2474ee6e71226p-4, 0x1.16cff349aba6ap-2, 0x1.263f7c39cbf95p-3, -0x1.0fb641eefcb2ap-2, 0x1.009631cd42902p-5,
        -0x1.b442f68236b81p-3, 0x1.664d79723f6bap-6, -0x1.4e5fa1df42d2bp-2, 0x1.0d2804f3c0b41p-3, 0x1.7b8c55364ee1fp-4, -0x1.1e0aff635c394p-5,
        -0x1.647425af1d6fp-7, -0x1.19ecfa0e94783p-4, -0x1.5e79ec0433025p-3, -0x1.170d215e69daep-2, 0x1.90a6e885197cp-5, 0x1.2365a48fc719ap-9,
        0x1.1ddc9ce58df1bp-3, 0x1.b016109e96a3dp-5, 0x1.4a5d193b1b6d8p-3, 0x1.88efc358177c4p-3, 0x1.8cc2f6e2e852fp-5, -0x1.0dd0753b1e173p-4,
        -0x1.0cf1c9cc49e65p-3, 0x1.40e192893a6c7p-3, 0x1.0594c7b23866dp-3, 0x1.c7399843e90a6p-3, -0x1.b510780a6f071p-9, -0x1.2d162c0d18033p-3,
        0x1.36a2bafa29c7bp-4, 0x1.6ed14ae9f2741p-4, -0x1.03ce0f36e7b03p-5, -0x1.c7da8eb3369bap-5, -0x1.d56e5f6303b9bp-5, -0x1.0e385e440b2ffp-5,
        0x1.0c787b2ed90c9p-4, 0x1.62c463d0a02e4p-5, 0x1.cdda30a97e749p-6, 0x1.be78b009b6e94p-6, 0x1.d5462d055cb89p-4, -0x1.2afb636e842d1p-6,
        0x1.a5495021a856dp-4, -0x1.ba3d6d4a621d1p-7, -0x1.86bb347fd407ap-3, 0x1.1ec29de7a3b1cp-3, 0x1.6039c9fae9648p-3, 0x1.d332d9c7f024ep-4,
        0x1.076a44d78928cp-2, 0x1.46632f5e0b81ep-3, -0x1.45988b0adf824p-6, 0x1.b1f1ffa8aa6a4p-4, -0x1.2b5f8cbdde6a5p-3, 0x1.9dea7101d7b0fp-3,
        0x1.ffd6df491beecp-4, -0x1.0e1b57d40f913p-3, -0x1.cf9820c1162e9p-3, -0x1.48cd2a964df32p-4, -0x1.1fb9cdd510549p-6, -0x1.0651492755d5p-4,
        0x1.0e100881a59a4p-6, 0x1.0ab49ea4a4e6cp-5, -0x1.030f88ec5336bp-5, -0x1.cd236f5245bd4p-3, -0x1.e1a83fef99d4ap-4, 0x1.5c639b42fce24p-5,
        -0x1.bbc513b3995b9p-3, -0x1.b4f1c1062d477p-5, 0x1.f12b876079b07p-5, -0x1.226e94a53784p-5, 0x1.174e616d70ea5p-5, -0x1.2c70621ec590bp-5,
        0x1.b34b7c99d047bp-3, 0x1.5127d3b53b3cbp-4, 0x1.01e24e5f03953p-6, -0x1.dcf75465db916p-3, 0x1.80696e4ee2f42p-5, -0x1.c15219ca6639ap-4,
        -0x1.15d797281f30dp-3, -0x1.53833b23ac185p-5, -0x1.45e49ce2edf09p-3, 0x1.44597d6c9aa41p-5, 0x1.825e99f4c54dbp-6, 0x1.9d018906c161p-6,
        0x1.bbefd6d0f7365p-4, 0x1.165d13ce89de4p-4, 0x1.2768f6b125224p-6, 0x1.e8486e9df2afap-4, 0x1.0b7893a7fc95ap-3, 0x1.5924bb783d444p-7,
        0x1.5ec9c3a981625p-4, 0x1.01f25fd0623d1p-2, 0x1.faec05e5fe772p-3, -0x1.0c8ad1b8e6524p-3, -0x1.d898f9f652dcap-4, 0x1.8de74fddd998bp-6,
        0x1.d8a1c0d087583p-5, -0x1.5c0c2d7831b0bp-3, -0x1.4dbd564da1adap-4, -0x1.d1c2c6b10506fp-9, -0x1.09d8b193321e1p-4, -0x1.c8073717ada7ep-6,
        0x1.7c03f114c9e56p-3, 0x1.699a44479d71bp-3, 0x1.d80a45912bf61p-4, -0x1.455039944a9ep-6, -0x1.29f2133d6f83ep-6, 0x1.6cf80592101cp-3,
        -0x1.0450b143cf3bfp-6, 0x1.8764af5ef4706p-6, 0x1.d67c259ba5345p-3, -0x1.4b112b3779c2p-4, -0x1.f5b6693c0a8f6p-10, 0x1.c81c2d23d3889p-3,
        -0x1.456217d270e3bp-4, -0x1.78ebc143c587fp-4, 0x1.26f44a92328a5p-2, -0x1.a74a679acfcb2p-4, -0x1.3a46912a21ef4p-2, 0x1.4636b09c1af65p-4,
        0x1.40a51e2a6399fp-4, 0x1.eadeac779a8aap-6, 0x1.868b054693ea6p-5, 0x1.15ac370806886p-10, 0x1.809563a08a83dp-9, 0x1.19748454ed78bp-3,
        0x1.a56037e88fb61p-3, 0x1.5cdb08da5997fp-8, -0x1.0807399b04d5fp-5, 0x1.812d473082e2ap-3, 0x1.0fbb0f30bd833p-3, -0x1.1fc229acd6819p-4,
        -0x1.ed6e81b6e1342p-5, -0x1.706f998f40148p-4, 0x1.dcf99bbfa7db1p-3, -0x1.22d527e4c9e09p-7, -0x1.b8fa23e1b9006p-4, -0x1.527c6ff3e6525p-4,
        0x1.e72feb5f9c8d4p-5, -0x1.1920377af7a4bp-3, 0x1.27d55dffe106fp-4, -0x1.71c9b9798a39ep-5, 0x1.512ac617a8135p-4, 0x1.4f2931c0b092fp-5,
        0x1.475158dc10f1cp-3, -0x1.afc5dd1287146p-6, -0x1.3d01c99adcf35p-3, 0x1.7201f9540c9fbp-3, -0x1.578a6ba8013bfp-4, -0x1.eab246ec2f459p-4,
        0x1.0b47ea2677fc4p-4, 0x1.1bf3734badd4cp-3, -0x1.b725ebbadc71bp-4, -0x1.634241103a4ep-3, 0x1.532962497d932p-5, -0x1.ff165758a5849p-6,
        -0x1.cf2db700750e3p-6, 0x1.c646558782d31p-2, -0x1.94dde83aa45c4p-6, -0x1.443b16e6656a5p-6, 0x1.ff780046fbaabp-5, 0x1.86d1383b04d7dp-2,
        0x1.592953acca9ep-4, 0x1.6dd9443baf162p-6, 0x1.a28516ee26767p-4, 0x1.5b7e28435478fp-4, 0x1.9ec10e2c2eb9fp-4, 0x1.567a17f456348p-4,
        -0x1.d36a17c61b33ap-3, 0x1.2cd299a9d9559p-4, -0x1.00e8bfd252eebp-5, -0x1.963a7faf63c43p-7, -0x1.308c834db0265p-4, 0x1.2fd660810db8ap-4,
        0x1.9facb2b66fefap-7, -0x1.371b2682b56b3p-4, 0x1.c516346bccdbdp-4, -0x1.04ed76e14530ep-4, -0x1.62d759023bdb5p-7, -0x1.2fa1393efa142p-4,
        0x1.46d44524b013fp-3, 0x1.5f4e32ede2616p-3, 0x1.b9e6e4cf00e06p-4, -0x1.b0f788c7ddd91p-4, -0x1.da415192689bep-7, -0x1.595101051a3ebp-4,
        -0x1.669a69f63239dp-5, 0x1.ad3b9b0a6cc49p-4, 0x1.e503c42454643p-4, -0x1.a65d8bf62a9a1p-6, -0x1.df1c43c1071fep-5, -0x1.2b71db7f2440cp-9,
        0x1.aa38082361502p-4, -0x1.1d0c33f406222p-6, -0x1.2c4e7c1ad795dp-4, -0x1.b29d76ae47f71p-5, 0x1.a49718fe318f2p-6, 0x1.d35a8edb8788fp-4,
        -0x1.16fab2f8ede36p-3, -0x1.2da116d04dc3cp-3, -0x1.ba56ea7140906p-5, -0x1.4562fbecb9bc7p-4, -0x1.0e21242579e49p-2, -0x1.0a42e849ba707p-3,
        0x1.e3d1154e2a068p-4, -0x1.71f25e7ff43afp-4, -0x1.8a29c04852711p-9, 0x1.2f6520c11ff69p-4, 0x1.3152a15bcf063p-5, 0x1.3a1ebe413bbb5p-4,
        -0x1.29a2d24cce4e9p-3, 0x1.1e9a7ef1756fap-3, -0x1.2431a903a6eb6p-3, -0x1.f7236445a96b4p-3, 0x1.73a38bd6d03d3p-5, -0x1.6ddd508d22aaep-5,
        0x1.45acc78271425p-3, -0x1.2570910faf2f6p-3, -0x1.dba90603b52a9p-4, 0x1.6497aca5c7a86p-5, -0x1.b51ff1f19fe2bp-5, -0x1.1e38e69b88af5p-4,
        -0x1.6a5350522c912p-4, -0x1.a1250ddabfe44p-3, -0x1.88e3ff3a0f946p-3, 0x1.d82b6585906f2p-8, 0x1.1b0f16d23267ep-3, 0x1.597e731f5b9f6p-3,
        0x1.0d65c91325e7fp-3, -0x1.038dbd4b62724p-4, -0x1.d3b8ee95c0233p-4, -0x1.10dd341d02149p-5, 0x1.568d6c5229febp-5, 0x1.de64b6041908cp-5,
        -0x1.28b1f387a1e8ap-3, -0x1.7c4daead42a22p-3, -0x1.29986b0c60effp-3, -0x1.46ecfdf846effp-2, 0x1.c3d051f19d378p-7, -0x1.0e5bf1ffd23f7p-2,
        -0x1.e1079dd4917fdp-4, -0x1.341f84bd9c3d9p-2, -0x1.8db72a0359d0cp-3, -0x1.083b9c5304882p-3, 0x1.fe0ce6dd753a6p-5, 0x1.1ab07b5e49e8bp-8,
        0x1.f91c635d017e5p-3, 0x1.72b37463bc375p-4, 0x1.a445cf0e5c8edp-4, 0x1.43434cc5ed0fdp-2, 0x1.0e40a3d47974bp-5, 0x1.422ee3bfabaf4p-4,
        -0x1.95684e04f30a5p-2, -0x1.0dc9f7c1589e6p-2, -0x1.8f6b53efcb216p-3, -0x1.58e9e6db282p-5, -0x1.b69365226d153p-6, -0x1.4d2264baca80ap-4,
        0x1.057dd09b11d58p-7, -0x1.0c66862ae2a5ap-4, -0x1.611db353aae57p-5, -0x1.75ae9aa92f389p-4, -0x1.16e337c4891f3p-4, 0x1.69097d5a8c264p-5,
        -0x1.5062ed97a5078p-5, 0x1.42ecfc7d22ad2p-3, -0x1.998a2e5732f45p-4, 0x1.dff5dc4f1f523p-5, 0x1.b08d55d4d211fp-6, -0x1.7f6918675e1f7p-3,
        0x1.248230389d1c4p-3, -0x1.36a4207128472p-7, 0x1.9e71ddf00e0a4p-4, -0x1.3f9e196349767p-4, -0x1.994351d809f5ap-3, 0x1.5d17e9ea7c455p-4,
        0x1.5a61386ddb50ep-5, 0x1.19ab2f6205753p-3, -0x1.05636d4af3391p-8, -0x1.29ad2d1d33cabp-4, 0x1.48231b5648e3fp-5, 0x1.e9235459d98a5p-4,
        0x1.33c1e49424b47p-5, -0x1.610ec98dd07d6p-5, -0x1.8819f4ee10f9dp-4, -0x1.2963f7c9f66f5p-5, 0x1.009f9f19f1c87p-3, -0x1.d6136265be57fp-6,
        0x1.a95f7f2fb1b9cp-7, -0x1.05a6d873dfa89p-4, -0x1.6547ddf4f5addp-5, 0x1.9a467cc59d4ep-12, -0x1.f75c42fff016cp-3, 0x1.e0c458a8e5377p-5,
        -0x1.dba1120f0faecp-5, 0x1.afc1b5758cda7p-5, -0x1.ddc1d461194a7p-4, 0x1.7ee43bb50a5e2p-3, -0x1.ff283a9172ee6p-7, -0x1.90266f00d2986p-3,
        0x1.c339c6be4ffe7p-4, -0x1.d53e990a8e673p-3, 0x1.69612652226c4p-4, -0x1.629fac06939a4p-4, -0x1.d60968e3c1476p-4, -0x1.04c50246f12fdp-3,
        -0x1.19633adbccaa4p-3, -0x1.f234b01d0ec3bp-6, 0x1.129b152327362p-5, -0x1.80e69d5015f3bp-6, -0x1.cdce2bbd8e2d3p-5, 0x1.8b426d39a5989p-3,
        -0x1.bd9b8ca326fb9p-5, -0x1.50db5cdc0d5f4p-4, 0x1.b526bf7bca86cp-5, 0x1.25d26917981f5p-5, -0x1.375efb525e62cp-5, -0x1.921ad8fc5257dp-5,
        -0x1.5b68766d3f47fp-3, -0x1.5f0aa13111c51p-4, -0x1.98d93b4bc1649p-4, -0x1.3da2fee81e7e5p-5, -0x1.84c37c94847bdp-3, 0x1.57aa59290f82bp-5,
        -0x1.d706f354aead7p-3, -0x1.0cc7c48d6227cp-7, -0x1.c75516278d83ap-4, -0x1.5abda0322391ap-2, -0x1.c6055be41f71p-5, 0x1.b243b53cee331p-4,
        0x1.43d9c2c4d918p-4, 0x1.a15c094831b6dp-5, -0x1.b5769c2ef2deep-5, -0x1.05697a56cd7f6p-2, 0x1.1ab011cb518e4p-4, -0x1.6164986462b02p-4,
        -0x1.d1d55ed9241c6p-3, 0x1.fa5f1ab072cedp-3, -0x1.412b989ff11e2p-3, -0x1.707a66f1b27e3p-4, -0x1.406885ecd990ap-3, -0x1.9be24b0397dc1p-5}));
    t.emplace_back("embedding.layer1.bias", Tensor({16}, {
        -0x1.eec9ef1238a7ep-10, -0x1.a761b3ad2c83dp-6, -0x1.078a9785ce29cp-5, -0x1.22f83b263b632p-6, -0x1.5522dfee9046cp-6, -0x1.209920896282p-6,
        0x1.e2529a75efb3ap-6, 0x1.52526a8d0b50ap-6, 0x1.9cec0c37ed5b7p-11, -0x1.cf7f76bb6d8e5p-7, 0x1.2507195dfecf8p-5, -0x1.9aa5b6dd38d42p-6,
        0x1.3e236d3bff35ap-6, 0x1.8463e35048daep-9, 0x1.afea8611f3287p-7, 0x1.67dd0f7c3dddbp-7}));
    t.emplace_back("embedding.layer2.config", Tensor({2}, {
        0x1p+0, 0x0p+0}));
    t.emplace_back("embedding.layer2.kernels", Tensor({8, 16, 1, 1}, {
        -0x1.ce6c3273a7555p-3, 0x1.6527b250a5605p-3, -0x1.dee6007723ddbp-3, -0x1.45f201e215f51p-1, 0x1.a7200610b72bdp-2, -0x1.92f8ea3223016p-1,
        0x1.720dace6d602ap-1, 0x1.6d7b17307c124p-4, 0x1.0b7fc084807e4p-2, -0x1.152260ee59b68p-2, -0x1.47e7fa834cbadp-2, 0x1.9a1d492126a6ep-3,
        0x1.85ba8946227bbp-3, -0x1.b768487187c51p-4, -0x1.f7036913f2ec7p-3, 0x1.26813349fbc1ap-8, 0x1.338f0db10f58dp-4, 0x1.a3b16e080d756p-8,
        -0x1.e7602878c5da3p-2, -0x1.306a0d0fc1a03p-1, -0x1.0e1eeed69fef5p-4, 0x1.dfb5182aee573p-6, 0x1.19511bfb0142dp-3, 0x1.461e0cf7d4181p-4,
        0x1.a48930a35c72bp-4, -0x1.9be7e7fb38cc8p-6, 0x1.9ef61731623e3p-3, -0x1.3594471391c8p-5, 0x1.1a8b640d88b45p-2, 0x1.c299f92b9bb0dp-5,
        -0x1.c6f99e25a14eap-4, -0x1.6445775887218p-3, -0x1.4451022bc966p-4, 0x1.ed565fa95b0bbp-3, 0x1.6e6d1f388dc02p-4, 0x1.35e8898ac9ffbp-1,
        0x1.87909859b3f7bp-2, 0x1.d42373292025cp-5, -0x1.a5982a6c0c8bep-4, -0x1.be7864eb2e4b1p-2, 0x1.7cecc7baf8ad3p-1, 0x1.97f9340f17e64p-1,
        0x1.16e769984ad4ap-5, -0x1.b491ace23f6a6p-3, 0x1.c6d30ca3c815ep-2, -0x1.2d5cd4d900257p-1, -0x1.cec8a709a5adfp-3, 0x1.04946ae7d55e2p+0,
        -0x1.029d2153a75ffp-4, -0x1.d1e399c609711p-3, 0x1.205bcdec94c88p-2, 0x1.8124e0daf5627p-1, 0x1.749826b4bc3aep-2, 0x1.4de45647bed66p-4,
        0x1.f9bc81687b314p-5, 0x1.3cff4b15a0cd4p-2, 0x1.5c37479a358b8p-8, -0x1.a9fcee1590f7bp-5, -0x1.5b6d9a67509e7p-2, 0x1.4293e964a2098p-1,
        0x1.12ffecede35d1p-1, 0x1.11272b13e1d68p-3, -0x1.bc55881905e06p-4, -0x1.02abf8f5a3cacp-3, -0x1.3a0686b8de566p-2, -0x1.83535d2b87e8ap-3,
        0x1.b4d184b134d65p-2, 0x1.a838815c51bf3p-2, -0x1.65c6187597544p-7, 0x1.fdb0d6543efc1p-4, -0x1.85e6baf9ae267p-2, 0x1.d94acc056001fp-4,
        -0x1.3c460c562fe2bp-2, 0x1.2413b14afc28ep-1, 0x1.785f56c95d076p-3, 0x1.a76283b5c4df9p-3, 0x1.e2fb811a60a0cp-2, -0x1.00c8465313ea6p-3,
        -0x1.0740968baa388p-2, -0x1.fc5c9433aa22ep-2, -0x1.2db8fa6e227f5p-1, -0x1.d8923f783ecb9p-3, -0x1.d3380680b0ad4p-1, 0x1.53e09c5e63074p-3,
        0x1.1c2bc6243f6dfp-3, 0x1.d8a9b3c0afe77p-2, -0x1.96ffa8be5895p-2, -0x1.054ea3ea2987fp-1, -0x1.d85583cd4afbap-2, 0x1.32262e6998e75p-2,
        -0x1.b05185c509e08p-4, -0x1.1c7b34137685ep-1, 0x1.411646172422fp-1, 0x1.612d38cf992bp-1, 0x1.f556bedb518d5p-2, -0x1.0b2ea1133454cp-3,
        0x1.2c60c1a93f61ep-2, 0x1.276262af0904fp-2, 0x1.cd1e60bb9ca25p-6, 0x1.18727df709a34p-1, 0x1.ac8702513d9bbp-2, 0x1.4a0e0785e6e0cp-1,
        -0x1.06aff38fc929ep-2, -0x1.8b14dc163bcc4p-3, -0x1.526687311dbcbp-2, 0x1.4e4f4fb42488cp-2, 0x1.cd6bbdf0bcc1bp-3, 0x1.48b16aebdf941p-1,
        -0x1.2f067d92eac5dp-1, -0x1.46c31c5c53ebcp-3, -0x1.ba463b77bd4f3p-3, 0x1.4ccd4e2c9c3f8p-2, 0x1.7a2bf1d1c310bp-3, 0x1.af8f75cc50371p-1,
        0x1.04d58fc356e8cp-2, 0x1.6d455ccaec07bp-4, 0x1.b6434c4199f31p-2, 0x1.c0ce8d03560cbp-2, -0x1.a16a1b3750aeap-6, 0x1.481d4fcee5335p-3,
        -0x1.2cb0b85bb2523p-4, 0x1.93016c1e9dab6p-1, -0x1.2b5b52496725fp-1, -0x1.5a82ddd6dcf46p-3, 0x1.99a99edd020f2p-2, 0x1.1cb7fabfc2b1dp-3,
        -0x1.9104d1a8fb249p-3, 0x1.ab5190c1d37d9p-2}));
    t.emplace_back("embedding.layer2.bias", Tensor({8}, {
        0x1.ae206c834920ap-6, 0x1.f9fb89d0bff5ep-7, -0x1.158fc439ad6ebp-5, -0x1.c268cf418dc09p-6, -0x1.e28e2e9e2c7a6p-7, -0x1.15dd63370a9p-7,
        -0x1.cd090a3aedad8p-7, -0x1.ee9c79dbe8d8bp-6}));
    return Embedding::from_named(t);
}

}  // namespace oalstm
